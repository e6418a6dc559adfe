use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::beta::{beta_expansion_check, beta_formula, beta_recursive, logbessel_beta_check};
use super::determinant::{determinant_cumulants_generic, determinant_moments_generic, DeterminantKind};
use super::lenczewski::lenczewski_sum_check;
use super::multivariate::{add_partitioned, moment_monomial, partitioned_cumulant, shared};
use super::ring::{product_of, Ring};
use super::univariate::{
    boolean_poisson_kappa, cumulant_series, cumulants_from_moments, moment_series, moments_from_cumulants,
    monotone_flow_series, tilde_generic, univariate_symbols,
};
use super::{Basis, CumulantKind};
use crate::algebra::{factorial, format_rational, int, rat, MomentPolynomial, Polynomial, Rational, TruncatedSeries};
use crate::forests::{alpha, depth, inverse_tree_factorial};
use crate::graphs::{anti_interval_graph, crossing_graph, enumerate_pyramids, tutte_eval, HeapMode};
use crate::partitions::{
    enumerate_monotone_with_limit, enumerate_with_limit, mask_elements, mobius, nests_inside, Lattice, PartitionClass,
    SetPartition,
};
use crate::permutations::{all_permutations, cyclic_permutations, eulerian, eulerian_polynomial};
use crate::{Error, Result};

/// Outcome of one identity check at one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub identity: String,
    pub n: usize,
    pub holds: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_value: Option<String>,
}

const SHOWN_TERMS: usize = 8;
const WITNESS_CHARS: usize = 600;

fn clip(s: String) -> String {
    if s.chars().count() <= WITNESS_CHARS {
        s
    } else {
        let mut t: String = s.chars().take(WITNESS_CHARS).collect();
        t.push_str(" …");
        t
    }
}

impl Report {
    pub(crate) fn polynomial(id: &str, n: usize, lhs: &MomentPolynomial, rhs: &MomentPolynomial) -> Self {
        let holds = lhs == rhs;
        let show = |p: &MomentPolynomial| (p.num_terms() <= SHOWN_TERMS).then(|| p.to_string());
        Report {
            identity: id.to_string(),
            n,
            holds,
            lhs_terms: lhs.num_terms(),
            rhs_terms: rhs.num_terms(),
            witness: (!holds).then(|| clip((lhs - rhs).to_string())),
            lhs_value: show(lhs),
            rhs_value: show(rhs),
        }
    }

    pub(crate) fn scalar(id: &str, n: usize, lhs: &Rational, rhs: &Rational) -> Self {
        let holds = lhs == rhs;
        Report {
            identity: id.to_string(),
            n,
            holds,
            lhs_terms: 1,
            rhs_terms: 1,
            witness: (!holds).then(|| format!("{} ≠ {}", format_rational(lhs), format_rational(rhs))),
            lhs_value: Some(format_rational(lhs)),
            rhs_value: Some(format_rational(rhs)),
        }
    }

    pub(crate) fn sequence(id: &str, n: usize, lhs: &[Rational], rhs: &[Rational]) -> Self {
        let holds = lhs == rhs;
        let join = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
        Report {
            identity: id.to_string(),
            n,
            holds,
            lhs_terms: lhs.len(),
            rhs_terms: rhs.len(),
            witness: (!holds).then(|| {
                let i = lhs
                    .iter()
                    .zip(rhs)
                    .position(|(a, b)| a != b)
                    .unwrap_or(lhs.len().min(rhs.len()));
                format!("first difference at index {}", i + 1)
            }),
            lhs_value: Some(clip(join(lhs))),
            rhs_value: Some(clip(join(rhs))),
        }
    }

    pub(crate) fn series(id: &str, n: usize, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        Self::sequence(id, n, lhs.coeffs(), rhs.coeffs())
    }

    pub(crate) fn flag(id: &str, n: usize, ok: bool, what: impl Into<String>) -> Self {
        Report {
            identity: id.to_string(),
            n,
            holds: ok,
            lhs_terms: 1,
            rhs_terms: 1,
            witness: (!ok).then(|| what.into()),
            lhs_value: None,
            rhs_value: None,
        }
    }

    /// Conjunction; keeps the first witness and the first displayed values.
    pub(crate) fn and(self, other: Report) -> Report {
        Report {
            identity: self.identity,
            n: self.n,
            holds: self.holds && other.holds,
            lhs_terms: self.lhs_terms + other.lhs_terms,
            rhs_terms: self.rhs_terms + other.rhs_terms,
            witness: self.witness.or(other.witness),
            lhs_value: self.lhs_value.or(other.lhs_value),
            rhs_value: self.rhs_value.or(other.rhs_value),
        }
    }

    fn all(id: &str, n: usize, reports: impl IntoIterator<Item = Report>) -> Report {
        let mut it = reports.into_iter();
        let first = it.next().unwrap_or_else(|| Report::flag(id, n, true, ""));
        let mut out = it.fold(first, Report::and);
        out.identity = id.to_string();
        out
    }
}

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $max:literal;)*) => {
        /// The verified identity catalog.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// Largest order accepted by [`verify_identity`].
            pub fn max_n(self) -> usize {
                match self {
                    $(IdentityId::$variant => $max,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    _ => Err(Error::UnknownIdentity(s.to_string())),
                }
            }
        }
    };
}

identity_ids! {
    Free2Boolean => "free2boolean", 8;
    Class2Free => "class2free", 7;
    Class2Boolean => "class2boolean", 7;
    Boolean2Free => "boolean2free", 8;
    Free2ClassTutte => "free2class_tutte", 7;
    Thm1Mono2Boolean => "thm1_mono2boolean", 7;
    Thm1Mono2Free => "thm1_mono2free", 7;
    Thm2Free2Mono => "thm2_free2mono", 7;
    Thm2Boolean2Mono => "thm2_boolean2mono", 7;
    Thm2Class2Mono => "thm2_class2mono", 7;
    Thm3Boolean2ClassTutte => "thm3_boolean2class_tutte", 7;
    Thm4CycleRuns => "thm4_cyclecruns", 7;
    CorRuns => "cor_runs", 7;
    PyramidsCrossing => "pyramids_crossing", 7;
    PyramidsInterval => "pyramids_interval", 7;
    MomentCumulantK => "moment_cumulant_K", 7;
    MomentCumulantR => "moment_cumulant_R", 8;
    MomentCumulantB => "moment_cumulant_B", 8;
    MomentCumulantH => "moment_cumulant_H", 7;
    MobiusInversions => "mobius_inversions", 6;
    SeriesB => "series_B", 9;
    SeriesR => "series_R", 9;
    SwapIdentities => "swap_identities", 9;
    TildeLemma => "tilde_lemma", 6;
    MonotoneFlowInteger => "monotone_flow_integer", 9;
    LenczewskiSum => "lenczewski_sum", 7;
    BetaExpansion => "beta_expansion", 6;
    Thm5Reducible => "thm5_reducible", 7;
    Thm5Nonesting => "thm5_nonesting", 7;
    Thm5Depth2 => "thm5_depth2", 7;
    Cor9Factorial => "cor9_factorial", 7;
    Prop10Eulerian => "prop10_eulerian", 8;
    DeterminantFormulas => "determinant_formulas", 8;
    LogbesselCarlitz => "logbessel_carlitz", 7;
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks one identity at order `n` by exact comparison.
pub fn verify_identity(id: IdentityId, n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::precondition("identity order must be at least 1"));
    }
    if n > id.max_n() {
        return Err(Error::limit(id.name(), n, id.max_n()));
    }
    let name = id.name();
    use CumulantKind::*;
    use IdentityId::*;
    match id {
        Free2Boolean => sum_identity(name, n, Boolean, PartitionClass::IrreducibleNoncrossing, Free, |_| {
            Ok(Rational::one())
        }),
        Class2Free => sum_identity(name, n, Free, PartitionClass::Connected, Classical, |_| {
            Ok(Rational::one())
        }),
        Class2Boolean => sum_identity(name, n, Boolean, PartitionClass::Irreducible, Classical, |_| {
            Ok(Rational::one())
        }),
        Boolean2Free => sum_identity(name, n, Free, PartitionClass::IrreducibleNoncrossing, Boolean, |pi| {
            Ok(sign(pi))
        }),
        Free2ClassTutte => sum_identity(name, n, Classical, PartitionClass::Connected, Free, |pi| {
            Ok(sign(pi) * tutte10(&crossing_graph(pi)))
        }),
        Thm1Mono2Boolean => thm1(name, n, Boolean),
        Thm1Mono2Free => thm1(name, n, Free),
        Thm2Free2Mono => thm2(name, n, Free),
        Thm2Boolean2Mono => thm2(name, n, Boolean),
        Thm2Class2Mono => thm2(name, n, Classical),
        Thm3Boolean2ClassTutte => sum_identity(name, n, Classical, PartitionClass::Irreducible, Boolean, |pi| {
            Ok(sign(pi) * tutte10(&anti_interval_graph(pi)))
        }),
        Thm4CycleRuns => thm4(name, n),
        CorRuns => cor_runs(name, n),
        PyramidsCrossing => pyramids(name, n, HeapMode::Crossing),
        PyramidsInterval => pyramids(name, n, HeapMode::Interval),
        MomentCumulantK => moment_cumulant(name, n, Classical),
        MomentCumulantR => moment_cumulant(name, n, Free),
        MomentCumulantB => moment_cumulant(name, n, Boolean),
        MomentCumulantH => moment_cumulant(name, n, Monotone),
        MobiusInversions => mobius_inversions(name, n),
        SeriesB => series_b(name, n),
        SeriesR => series_r(name, n),
        SwapIdentities => swap_identities(name, n),
        TildeLemma => tilde_lemma(name, n),
        MonotoneFlowInteger => monotone_flow(name, n),
        LenczewskiSum => Ok(Report::all(
            name,
            n,
            (1..=5)
                .map(|colors| lenczewski_sum_check(n, colors))
                .collect::<Result<Vec<_>>>()?,
        )),
        BetaExpansion => beta_expansion_check(n),
        Thm5Reducible => thm5(name, n, Thm5Case::Reducible),
        Thm5Nonesting => thm5(name, n, Thm5Case::Nonesting),
        Thm5Depth2 => thm5(name, n, Thm5Case::Depth2),
        Cor9Factorial => cor9(name, n),
        Prop10Eulerian => prop10(name, n),
        DeterminantFormulas => determinants(name, n),
        LogbesselCarlitz => {
            let r = logbessel_beta_check(n)?;
            let mut report = Report::flag(name, n, r.holds, "log-Bessel or Carlitz mismatch");
            report.lhs_terms = n;
            report.rhs_terms = n;
            report.lhs_value = Some(r.scaled_beta.join(","));
            report.rhs_value = Some(r.logbessel.join(","));
            Ok(report)
        }
    }
}

fn sign(pi: &SetPartition) -> Rational {
    int(if pi.num_blocks() % 2 == 1 { 1 } else { -1 })
}

fn tutte10(g: &crate::graphs::MixedGraph) -> Rational {
    tutte_eval(g, &Rational::one(), &Rational::zero())
}

fn ratu(u: num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(u))
}

fn list(n: usize, class: PartitionClass) -> Result<Vec<SetPartition>> {
    enumerate_with_limit(n, class, 9)
}

/// `target_n = Σ_{π∈class} w(π) source_π`.
fn sum_identity(
    id: &str,
    n: usize,
    target: CumulantKind,
    class: PartitionClass,
    source: CumulantKind,
    weight: impl Fn(&SetPartition) -> Result<Rational>,
) -> Result<Report> {
    let lhs = (*shared(target, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    for pi in list(n, class)? {
        add_partitioned(&mut rhs, source, &pi, &weight(&pi)?)?;
    }
    Ok(Report::polynomial(id, n, &lhs, &rhs))
}

fn thm1(id: &str, n: usize, target: CumulantKind) -> Result<Report> {
    let signed = target == CumulantKind::Free;
    let weight = |k: usize| if signed && k.is_multiple_of(2) { int(-1) } else { int(1) };
    let nc = sum_identity(
        id,
        n,
        target,
        PartitionClass::IrreducibleNoncrossing,
        CumulantKind::Monotone,
        |pi| Ok(weight(pi.num_blocks()) * inverse_tree_factorial(pi)?),
    )?;
    let lhs = (*shared(target, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    for op in enumerate_monotone_with_limit(n, 8)? {
        let pi = op.base();
        if !pi.is_irreducible() {
            continue;
        }
        let k = pi.num_blocks();
        let c = weight(k) / ratu(factorial(k));
        add_partitioned(&mut rhs, CumulantKind::Monotone, pi, &c)?;
    }
    Ok(nc.and(Report::polynomial(id, n, &lhs, &rhs)))
}

fn thm2(id: &str, n: usize, source: CumulantKind) -> Result<Report> {
    let syms = univariate_symbols(n);
    let h = cumulants_from_moments(CumulantKind::Monotone, &syms)?;
    let c = cumulants_from_moments(source, &syms)?;
    let one = MomentPolynomial::one(n);
    let mut rhs = MomentPolynomial::zero(n);
    let class = match source {
        CumulantKind::Classical => PartitionClass::Irreducible,
        _ => PartitionClass::IrreducibleNoncrossing,
    };
    for pi in list(n, class)? {
        let w = match source {
            CumulantKind::Classical => alpha(&pi.noncrossing_closure())?,
            CumulantKind::Boolean => sign(&pi) * alpha(&pi)?,
            _ => alpha(&pi)?,
        };
        rhs = rhs.r_add(&product_of(&c, &pi.block_sizes(), &one).r_scale(&w));
    }
    Ok(Report::polynomial(id, n, &h[n - 1], &rhs))
}

fn thm4(id: &str, n: usize) -> Result<Report> {
    let lhs = (*shared(CumulantKind::Classical, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    for sigma in cyclic_permutations(n) {
        let runs = sigma.cycle_runs();
        add_partitioned(&mut rhs, CumulantKind::Boolean, &runs, &sign(&runs))?;
    }
    let main = Report::polynomial(id, n, &lhs, &rhs);
    // Signed sum over all permutations recovers the moment.
    let moment = moment_monomial(&SetPartition::one(n));
    let mut total = MomentPolynomial::zero(n);
    for sigma in all_permutations(n) {
        let runs = sigma.cycle_runs();
        let e = runs.num_blocks() + sigma.num_cycles();
        add_partitioned(
            &mut total,
            CumulantKind::Boolean,
            &runs,
            &int(if e % 2 == 0 { 1 } else { -1 }),
        )?;
    }
    Ok(main.and(Report::polynomial(id, n, &moment, &total)))
}

fn cor_runs(id: &str, n: usize) -> Result<Report> {
    let lhs = (*shared(CumulantKind::Classical, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    for sigma in all_permutations(n).into_iter().filter(|s| s.apply(1) == 1) {
        let (runs, d) = sigma.runs();
        add_partitioned(
            &mut rhs,
            CumulantKind::Boolean,
            &runs,
            &int(if d % 2 == 0 { 1 } else { -1 }),
        )?;
    }
    Ok(Report::polynomial(id, n, &lhs, &rhs))
}

fn pyramids(id: &str, n: usize, mode: HeapMode) -> Result<Report> {
    let (class, source) = match mode {
        HeapMode::Crossing => (PartitionClass::Connected, CumulantKind::Free),
        HeapMode::Interval => (PartitionClass::Irreducible, CumulantKind::Boolean),
    };
    let lhs = (*shared(CumulantKind::Classical, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    let mut counts = Vec::new();
    for pi in list(n, class)? {
        let p = enumerate_pyramids(&pi, mode)?;
        let count = int(p.len() as i64);
        let graph = match mode {
            HeapMode::Crossing => crossing_graph(&pi),
            HeapMode::Interval => anti_interval_graph(&pi),
        };
        counts.push(Report::scalar(id, n, &count, &tutte10(&graph)));
        for h in &p {
            add_partitioned(&mut rhs, source, &h.base, &sign(&h.base))?;
        }
    }
    Ok(Report::all(
        id,
        n,
        std::iter::once(Report::polynomial(id, n, &lhs, &rhs)).chain(counts),
    ))
}

fn moment_cumulant(id: &str, n: usize, kind: CumulantKind) -> Result<Report> {
    let lhs = moment_monomial(&SetPartition::one(n));
    let mut rhs = MomentPolynomial::zero(n);
    for pi in list(n, kind.class())? {
        let w = if kind == CumulantKind::Monotone {
            inverse_tree_factorial(&pi)?
        } else {
            Rational::one()
        };
        add_partitioned(&mut rhs, kind, &pi, &w)?;
    }
    let mut report = Report::polynomial(id, n, &lhs, &rhs);
    if kind == CumulantKind::Monotone {
        let mut ordered = MomentPolynomial::zero(n);
        for op in enumerate_monotone_with_limit(n, 8)? {
            let k = op.base().num_blocks();
            add_partitioned(&mut ordered, kind, op.base(), &ratu(factorial(k)).recip())?;
        }
        report = report.and(Report::polynomial(id, n, &lhs, &ordered));
    }
    Ok(report)
}

fn mobius_inversions(id: &str, n: usize) -> Result<Report> {
    let mut reports = Vec::new();
    for (kind, lattice) in [
        (CumulantKind::Classical, Lattice::P),
        (CumulantKind::Free, Lattice::NC),
        (CumulantKind::Boolean, Lattice::I),
    ] {
        let members = list(n, lattice.class())?;
        for pi in &members {
            let lhs = partitioned_cumulant(kind, pi)?;
            let mut rhs = MomentPolynomial::zero(n);
            for sigma in &members {
                if sigma.leq(pi)? {
                    rhs.add_scaled(&moment_monomial(sigma), &mobius(sigma, pi, lattice)?);
                }
            }
            reports.push(Report::polynomial(id, n, &lhs, &rhs));
        }
    }
    Ok(Report::all(id, n, reports))
}

const SAMPLES: u64 = 5;

/// Deterministic random rational sequence of length `n`.
pub(crate) fn random_sequence(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
        .collect()
}

fn rng_for(id: &str, n: usize) -> ChaCha8Rng {
    let seed = id
        .bytes()
        .fold(n as u64, |acc, b| acc.wrapping_mul(131).wrapping_add(b as u64));
    ChaCha8Rng::seed_from_u64(seed)
}

/// `M = 1 / (1 − B)` for one moment sequence.
pub(crate) fn series_b_holds(m: &[Rational]) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let n = m.len();
    let b = cumulants_from_moments(CumulantKind::Boolean, m)?;
    let lhs = moment_series(m);
    let rhs = (&TruncatedSeries::one(n) - &cumulant_series(&b)).reciprocal()?;
    Ok((lhs, rhs))
}

/// `1 + R(z M(z)) = M(z)` for one moment sequence.
pub(crate) fn series_r_holds(m: &[Rational]) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let n = m.len();
    let r = cumulants_from_moments(CumulantKind::Free, m)?;
    let big_m = moment_series(m);
    let inner = big_m.shift();
    let lhs = &TruncatedSeries::one(n) + &cumulant_series(&r).compose(&inner)?;
    Ok((lhs, big_m))
}

/// Both swap identities for one moment sequence.
pub(crate) fn swap_holds(m: &[Rational]) -> Result<[(TruncatedSeries, TruncatedSeries); 2]> {
    let n = m.len();
    let one = TruncatedSeries::one(n);
    let b = cumulant_series(&cumulants_from_moments(CumulantKind::Boolean, m)?);
    let r = cumulant_series(&cumulants_from_moments(CumulantKind::Free, m)?);
    let inv_b = (&one - &b).reciprocal()?;
    let first = (&one + &r.compose(&inv_b.shift())?, inv_b);
    let inv_r = (&one + &r).reciprocal()?;
    let second = (&one - &b.compose(&inv_r.shift())?, inv_r);
    Ok([first, second])
}

fn series_b(id: &str, n: usize) -> Result<Report> {
    let mut rng = rng_for(id, n);
    let reports = (0..SAMPLES)
        .map(|_| {
            let (l, r) = series_b_holds(&random_sequence(&mut rng, n))?;
            Ok(Report::series(id, n, &l, &r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::all(id, n, reports))
}

fn series_r(id: &str, n: usize) -> Result<Report> {
    let mut rng = rng_for(id, n);
    let reports = (0..SAMPLES)
        .map(|_| {
            let (l, r) = series_r_holds(&random_sequence(&mut rng, n))?;
            Ok(Report::series(id, n, &l, &r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::all(id, n, reports))
}

fn swap_identities(id: &str, n: usize) -> Result<Report> {
    let mut rng = rng_for(id, n);
    let mut reports = Vec::new();
    for _ in 0..SAMPLES {
        let m = random_sequence(&mut rng, n);
        for (l, r) in swap_holds(&m)? {
            reports.push(Report::series(id, n, &l, &r));
        }
        let twice = tilde_generic(&tilde_generic(&m)?)?;
        reports.push(Report::sequence(id, n, &twice, &m));
    }
    Ok(Report::all(id, n, reports))
}

/// Multivariate moments of `X̃`, i.e. `R_n(X̃) = −B_n(X)`, as polynomials in the
/// moments of `X`: entry `k − 1` lives on `[k]`.
fn tilde_moment_polys(n: usize) -> Result<Vec<MomentPolynomial>> {
    (1..=n)
        .map(|k| {
            let mut acc = MomentPolynomial::zero(k);
            for sigma in list(k, PartitionClass::Noncrossing)? {
                let s = if sigma.num_blocks() % 2 == 0 { int(1) } else { int(-1) };
                add_partitioned(&mut acc, CumulantKind::Boolean, &sigma, &s)?;
            }
            Ok(acc)
        })
        .collect()
}

fn tilde_lemma(id: &str, n: usize) -> Result<Report> {
    let tilde = tilde_moment_polys(n)?;
    let image = |s: crate::algebra::MomentSymbol| {
        let elements = mask_elements(s.mask());
        tilde[elements.len() - 1].relabel(&elements, n)
    };
    let mut reports = Vec::new();
    for (kind, expect) in [
        (CumulantKind::Free, CumulantKind::Boolean),
        (CumulantKind::Boolean, CumulantKind::Free),
        (CumulantKind::Monotone, CumulantKind::Monotone),
    ] {
        let lhs = shared(kind, n)?.substitute(n, image);
        let rhs = shared(expect, n)?.scale(&int(-1));
        reports.push(Report::polynomial(id, n, &lhs, &rhs));
    }
    let mut rng = rng_for(id, n);
    for _ in 0..SAMPLES {
        let m = random_sequence(&mut rng, n);
        reports.push(Report::sequence(id, n, &tilde_generic(&tilde_generic(&m)?)?, &m));
    }
    Ok(Report::all(id, n, reports))
}

fn monotone_flow(id: &str, n: usize) -> Result<Report> {
    let mut rng = rng_for(id, n);
    let mut reports = Vec::new();
    for _ in 0..SAMPLES {
        let h = random_sequence(&mut rng, n);
        for t in -2i64..=2 {
            for s in -2i64..=2 {
                let outer = monotone_flow_series(&h, &int(t))?;
                let inner = monotone_flow_series(&h, &int(s))?;
                let lhs = monotone_flow_series(&h, &int(t + s))?;
                reports.push(Report::series(id, n, &lhs, &outer.compose(&inner)?));
            }
        }
        let m = moments_from_cumulants(CumulantKind::Monotone, &h)?;
        let minus = super::univariate::monotone_dilate(&h, &int(-1))?;
        reports.push(Report::sequence(id, n, &minus, &tilde_generic(&m)?));
    }
    Ok(Report::all(id, n, reports))
}

enum Thm5Case {
    Reducible,
    Nonesting,
    Depth2,
}

fn has_nesting(pi: &SetPartition) -> bool {
    let b = pi.blocks();
    b.iter().any(|&v| b.iter().any(|&w| v != w && nests_inside(v, w)))
}

fn thm5(id: &str, n: usize, case: Thm5Case) -> Result<Report> {
    let mut reports = Vec::new();
    for pi in list(n, PartitionClass::All)? {
        let expected = match case {
            Thm5Case::Reducible if !pi.is_irreducible() => Rational::zero(),
            Thm5Case::Nonesting if pi.is_irreducible() && !has_nesting(&pi) => {
                sign(&pi) * tutte10(&crossing_graph(&pi))
            }
            Thm5Case::Depth2 if pi.is_irreducible() && pi.is_noncrossing() && depth(&pi)? <= 2 => {
                sign(&pi) / int(pi.num_blocks() as i64)
            }
            _ => continue,
        };
        let recursive = beta_recursive(&pi)?;
        let formula = beta_formula(&pi)?;
        reports.push(Report::scalar(id, n, &recursive, &formula));
        reports.push(Report::scalar(id, n, &recursive, &expected));
    }
    Ok(Report::all(id, n, reports))
}

fn cor9(id: &str, n: usize) -> Result<Report> {
    let mut by_blocks = vec![Rational::zero(); n + 1];
    for pi in list(n, PartitionClass::Irreducible)? {
        by_blocks[pi.num_blocks()] += tutte10(&anti_interval_graph(&pi));
    }
    let total: Rational = by_blocks.iter().sum();
    let mut report = Report::scalar(id, n, &total, &ratu(factorial(n - 1)));
    let refined: Vec<Rational> = (1..=n).map(|k| ratu(eulerian(n - 1, k - 1))).collect();
    report = report.and(Report::sequence(id, n, &by_blocks[1..], &refined));
    report.lhs_value = Some(format_rational(&total));
    Ok(report)
}

fn prop10(id: &str, n: usize) -> Result<Report> {
    let x = Polynomial::var('x');
    let kappa = boolean_poisson_kappa(n)?;
    let minus_x = x.scale(&int(-1));
    let expected = &x * &eulerian_polynomial(n - 1).compose(&minus_x);
    let mut by_descents = Polynomial::zero('x');
    for sigma in all_permutations(n).into_iter().filter(|s| s.apply(1) == 1) {
        let d = sigma.descents();
        let c = int(if d % 2 == 0 { 1 } else { -1 });
        by_descents = &by_descents + &Polynomial::monomial(c, d + 1, 'x');
    }
    Ok(
        Report::sequence(id, n, kappa.coeffs(), expected.coeffs()).and(Report::sequence(
            id,
            n,
            by_descents.coeffs(),
            expected.coeffs(),
        )),
    )
}

fn determinants(id: &str, n: usize) -> Result<Report> {
    let syms = univariate_symbols(n);
    let mut reports = Vec::new();
    for (det, kind) in [
        (DeterminantKind::Classical, CumulantKind::Classical),
        (DeterminantKind::Boolean, CumulantKind::Boolean),
    ] {
        let by_det = determinant_cumulants_generic(det, &syms);
        let by_mobius = cumulants_from_moments(kind, &syms)?;
        reports.push(Report::polynomial(id, n, &by_det[n - 1], &by_mobius[n - 1]));
        let by_det = determinant_moments_generic(det, &syms);
        let by_mobius = moments_from_cumulants(kind, &syms)?;
        reports.push(Report::polynomial(id, n, &by_det[n - 1], &by_mobius[n - 1]));
    }
    let mut rng = rng_for(id, n);
    for _ in 0..SAMPLES {
        let m = random_sequence(&mut rng, n);
        for (det, kind) in [
            (DeterminantKind::Classical, CumulantKind::Classical),
            (DeterminantKind::Boolean, CumulantKind::Boolean),
        ] {
            let c = super::univariate::convert_generic(Basis::Moments, kind.into(), &m)?;
            reports.push(Report::sequence(id, n, &determinant_cumulants_generic(det, &m), &c));
            reports.push(Report::sequence(id, n, &determinant_moments_generic(det, &c), &m));
        }
    }
    Ok(Report::all(id, n, reports))
}

/// Pass/fail of the multivariate analogue of the univariate monotone
/// expansions; not part of the catalog.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentalReport {
    pub n: usize,
    pub free: bool,
    pub boolean: bool,
    pub classical: bool,
}

pub fn experimental_multivariate_thm2(n: usize) -> Result<ExperimentalReport> {
    if n > 7 {
        return Err(Error::limit("experimental order", n, 7));
    }
    let id = "experimental_thm2";
    let free = sum_identity(
        id,
        n,
        CumulantKind::Monotone,
        PartitionClass::IrreducibleNoncrossing,
        CumulantKind::Free,
        alpha,
    )?;
    let boolean = sum_identity(
        id,
        n,
        CumulantKind::Monotone,
        PartitionClass::IrreducibleNoncrossing,
        CumulantKind::Boolean,
        |pi| Ok(sign(pi) * alpha(pi)?),
    )?;
    let classical = sum_identity(
        id,
        n,
        CumulantKind::Monotone,
        PartitionClass::Irreducible,
        CumulantKind::Classical,
        |pi| alpha(&pi.noncrossing_closure()),
    )?;
    Ok(ExperimentalReport {
        n,
        free: free.holds,
        boolean: boolean.holds,
        classical: classical.holds,
    })
}
