//! Cumulant families as moment polynomials, univariate conversions, the β
//! coefficients and the identity verifier.

mod beta;
mod determinant;
mod identities;
mod lenczewski;
mod multivariate;
mod ring;
mod univariate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partitions::PartitionClass;
use crate::Error;

pub use beta::{
    beta, beta_expansion_check, beta_formula, beta_recursive, beta_table, logbessel_beta_check, logbessel_coefficients,
    nested_pairs, BetaRow, BetaTable, LogBesselReport,
};
pub use determinant::{determinant_cumulants, determinant_moments, hessenberg_determinant, DeterminantKind};
pub use identities::{experimental_multivariate_thm2, verify_identity, ExperimentalReport, IdentityId, Report};
pub use lenczewski::{coloring_count_brute_force, lenczewski_sum_check};
pub use multivariate::{cumulant_poly, max_order, moment_monomial, partitioned_cumulant};
pub use ring::Ring;
pub use univariate::{
    boolean_poisson_kappa, convert_sequence, cumulant_series, cumulants_from_moments, moment_series,
    moments_from_cumulants, monotone_dilate, monotone_flow_series, tilde_transform, univariate_symbols, MAX_UNIVARIATE,
};

/// The four cumulant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CumulantKind {
    Classical,
    Free,
    Boolean,
    Monotone,
}

impl CumulantKind {
    pub const ALL: [CumulantKind; 4] = [
        CumulantKind::Classical,
        CumulantKind::Free,
        CumulantKind::Boolean,
        CumulantKind::Monotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CumulantKind::Classical => "classical",
            CumulantKind::Free => "free",
            CumulantKind::Boolean => "boolean",
            CumulantKind::Monotone => "monotone",
        }
    }

    pub fn letter(self) -> char {
        match self {
            CumulantKind::Classical => 'K',
            CumulantKind::Free => 'R',
            CumulantKind::Boolean => 'B',
            CumulantKind::Monotone => 'H',
        }
    }

    /// Partitions indexing the moment-cumulant sum.
    pub fn class(self) -> PartitionClass {
        match self {
            CumulantKind::Classical => PartitionClass::All,
            CumulantKind::Free | CumulantKind::Monotone => PartitionClass::Noncrossing,
            CumulantKind::Boolean => PartitionClass::Interval,
        }
    }
}

impl fmt::Display for CumulantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CumulantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "classical" | "k" | "kappa" => Ok(CumulantKind::Classical),
            "free" | "r" => Ok(CumulantKind::Free),
            "boolean" | "b" => Ok(CumulantKind::Boolean),
            "monotone" | "h" => Ok(CumulantKind::Monotone),
            _ => Err(Error::precondition(format!("unknown cumulant kind `{s}`"))),
        }
    }
}

/// A univariate coordinate system: moments or one of the cumulant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Moments,
    Cumulants(CumulantKind),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Moments => f.write_str("moments"),
            Basis::Cumulants(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "moments" | "moment" | "m" => Ok(Basis::Moments),
            other => other
                .parse()
                .map(Basis::Cumulants)
                .map_err(|_| Error::precondition(format!("unknown basis `{s}`"))),
        }
    }
}

impl From<CumulantKind> for Basis {
    fn from(k: CumulantKind) -> Self {
        Basis::Cumulants(k)
    }
}
