use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::identities::Report;
use super::multivariate::{add_partitioned, shared};
use super::CumulantKind;
use crate::algebra::{factorial, format_rational, int, parse_rational, MomentPolynomial, Rational, TruncatedSeries};
use crate::forests::tree_factorial;
use crate::graphs::{anti_interval_digraph, digraph_key, MixedGraph};
use crate::partitions::{enumerate_with_limit, triangle_geq, PartitionClass, SetPartition};
use crate::{Error, Result};

/// Largest number of blocks accepted by the β routines.
pub const MAX_BETA_BLOCKS: usize = 10;

fn check_blocks(pi: &SetPartition) -> Result<()> {
    if pi.num_blocks() > MAX_BETA_BLOCKS {
        return Err(Error::limit("β block count", pi.num_blocks(), MAX_BETA_BLOCKS));
    }
    Ok(())
}

fn cache() -> &'static RwLock<HashMap<String, Rational>> {
    static CACHE: OnceLock<RwLock<HashMap<String, Rational>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Block groupings `[k] → set partitions`, memoized per `k`.
fn groupings(k: usize) -> Result<std::sync::Arc<Vec<SetPartition>>> {
    type GroupCache = RwLock<HashMap<usize, std::sync::Arc<Vec<SetPartition>>>>;
    static GROUPS: OnceLock<GroupCache> = OnceLock::new();
    let groups = GROUPS.get_or_init(Default::default);
    if let Some(g) = groups.read().expect("cache lock").get(&k) {
        return Ok(g.clone());
    }
    let all = std::sync::Arc::new(enumerate_with_limit(k, PartitionClass::All, MAX_BETA_BLOCKS)?);
    Ok(groups.write().expect("cache lock").entry(k).or_insert(all).clone())
}

fn beta_digraph(g: &MixedGraph) -> Result<Rational> {
    let key = digraph_key(g);
    if let Some(v) = cache().read().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let k = g.n;
    let mut value = if g.undirected.is_empty() {
        let mut descendants = vec![1u64; k];
        for &[from, _] in &g.directed {
            descendants[from] += 1;
        }
        let tau: BigInt = descendants.iter().map(|&d| BigInt::from(d)).product();
        Rational::new(BigInt::one(), tau)
    } else {
        Rational::zero()
    };
    if k > 1 {
        for rho in groupings(k)?.iter() {
            if rho.num_blocks() == 1 {
                continue;
            }
            let mut prod = Rational::one();
            for &w in rho.blocks() {
                if w.count_ones() > 1 {
                    prod *= beta_digraph(&g.induced(w as u64))?;
                    if prod.is_zero() {
                        break;
                    }
                }
            }
            value -= prod;
        }
    }
    cache().write().expect("cache lock").insert(key, value.clone());
    Ok(value)
}

/// β(π) from the recursion over `[π, 1̂)`, memoized on the anti-interval digraph.
pub fn beta_recursive(pi: &SetPartition) -> Result<Rational> {
    check_blocks(pi)?;
    beta_digraph(&anti_interval_digraph(pi))
}

/// β(π) = Σ_{σ ⊵ π} μ_P(σ, 1̂) / τ(π|σ)!.
pub fn beta_formula(pi: &SetPartition) -> Result<Rational> {
    check_blocks(pi)?;
    let blocks = pi.blocks();
    let mut total = Rational::zero();
    for rho in groupings(pi.num_blocks())?.iter() {
        let merged: Vec<u32> = rho
            .blocks()
            .iter()
            .map(|&g| {
                (0..blocks.len())
                    .filter(|i| g >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | blocks[i])
            })
            .collect();
        let sigma = SetPartition::from_masks(pi.n(), merged)?;
        if !triangle_geq(&sigma, pi)? {
            continue;
        }
        let s = sigma.num_blocks();
        let mu = int(if s % 2 == 1 { 1 } else { -1 }) * Rational::from_integer(BigInt::from(factorial(s - 1)));
        let mut tau = BigInt::one();
        for &w in sigma.blocks() {
            tau *= BigInt::from(tree_factorial(&pi.restrict_mask(w))?);
        }
        total += mu / Rational::from_integer(tau);
    }
    Ok(total)
}

/// β(π) via the memoized recursion.
pub fn beta(pi: &SetPartition) -> Result<Rational> {
    beta_recursive(pi)
}

/// One line of a β table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetaRow {
    pub partition: SetPartition,
    pub key: String,
    #[serde(serialize_with = "ser_rational")]
    pub beta: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// β for every partition of `[n]`, in enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BetaTable {
    pub n: usize,
    pub rows: Vec<BetaRow>,
}

impl BetaTable {
    pub fn get(&self, pi: &SetPartition) -> Option<&Rational> {
        self.rows.iter().find(|r| &r.partition == pi).map(|r| &r.beta)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["partition", "key", "beta"]).expect("in-memory write");
        for r in &self.rows {
            w.write_record([r.partition.to_string(), r.key.clone(), format_rational(&r.beta)])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| {
                let pos = e.position().map_or(0, |p| p.byte() as usize);
                Error::parse(pos, e.to_string())
            })?;
            let pos = record.position().map_or(0, |p| p.byte() as usize);
            if record.len() != 3 {
                return Err(Error::parse(pos, "expected three CSV fields"));
            }
            rows.push(BetaRow {
                partition: SetPartition::parse(&record[0])?,
                key: record[1].to_string(),
                beta: parse_rational(&record[2])?,
            });
        }
        let n = rows.first().map_or(0, |r| r.partition.n());
        Ok(BetaTable { n, rows })
    }
}

/// β over all of `P(n)`.
pub fn beta_table(n: usize) -> Result<BetaTable> {
    let rows = enumerate_with_limit(n, PartitionClass::All, 8)?
        .into_iter()
        .map(|pi| {
            let beta = beta_recursive(&pi)?;
            let key = digraph_key(&anti_interval_digraph(&pi));
            Ok(BetaRow {
                partition: pi,
                key,
                beta,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaTable { n, rows })
}

/// `K_n = Σ_{π∈P(n)} β(π) H_π` with β from the closed sum.
pub fn beta_expansion_check(n: usize) -> Result<Report> {
    if n > 6 {
        return Err(Error::limit("beta expansion order", n, 6));
    }
    let lhs = (*shared(CumulantKind::Classical, n)?).clone();
    let mut rhs = MomentPolynomial::zero(n);
    for pi in enumerate_with_limit(n, PartitionClass::All, 6)? {
        add_partitioned(&mut rhs, CumulantKind::Monotone, &pi, &beta_formula(&pi)?)?;
    }
    Ok(Report::polynomial("beta_expansion", n, &lhs, &rhs))
}

/// `π_n = {{1,2n},{2,2n−1},…,{n,n+1}}`.
pub fn nested_pairs(n: usize) -> Result<SetPartition> {
    let blocks: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, 2 * n + 1 - i]).collect();
    SetPartition::from_blocks(2 * n, &blocks)
}

/// `(n!)² [z^n] log(1 + Σ_{k≥1} z^k/(k!)²)` for `n = 1..max_n`.
pub fn logbessel_coefficients(max_n: usize) -> Result<Vec<Rational>> {
    let f = TruncatedSeries::from_fn(max_n, |k| {
        let fk = Rational::from_integer(BigInt::from(factorial(k)));
        (&fk * &fk).recip()
    });
    let log = f.log()?;
    Ok((1..=max_n)
        .map(|n| {
            let fk = Rational::from_integer(BigInt::from(factorial(n)));
            log.coeff(n) * &fk * &fk
        })
        .collect())
}

/// Outcome of the log-Bessel comparison.
#[derive(Clone, Debug, Serialize)]
pub struct LogBesselReport {
    pub max_n: usize,
    /// `n! β(π_n)`.
    pub scaled_beta: Vec<String>,
    pub logbessel: Vec<String>,
    pub carlitz_holds: bool,
    pub holds: bool,
}

/// `n! β(π_n)` against the log-Bessel coefficients and the Carlitz recursion
/// `a_{n+1} = Σ_k C(n,k) C(n,k−1) a_k a_{n+1−k}` for `a_n = (−1)^{n−1} n! β(π_n)`.
pub fn logbessel_beta_check(max_n: usize) -> Result<LogBesselReport> {
    if max_n > 7 {
        return Err(Error::limit("log-Bessel order", max_n, 7));
    }
    let scaled = (1..=max_n)
        .map(|n| {
            let b = beta_recursive(&nested_pairs(n)?)?;
            Ok(b * Rational::from_integer(BigInt::from(factorial(n))))
        })
        .collect::<Result<Vec<_>>>()?;
    let series = logbessel_coefficients(max_n)?;
    let a: Vec<Rational> = scaled
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b.clone() })
        .collect();
    let carlitz_holds = (1..max_n).all(|n| {
        let rhs = (1..=n).fold(Rational::zero(), |acc, k| {
            let c = BigInt::from(crate::algebra::binomial(n, k) * crate::algebra::binomial(n, k - 1));
            acc + Rational::from_integer(c) * &a[k - 1] * &a[n - k]
        });
        a[n] == rhs
    });
    Ok(LogBesselReport {
        max_n,
        holds: carlitz_holds && scaled == series,
        scaled_beta: scaled.iter().map(format_rational).collect(),
        logbessel: series.iter().map(format_rational).collect(),
        carlitz_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(beta_recursive(&SetPartition::one(4)).unwrap(), int(1));
        assert_eq!(beta_recursive(&p("1,2|3,4")).unwrap(), int(0));
        assert_eq!(beta_recursive(&nested_pairs(3).unwrap()).unwrap(), rat(2, 3));
        assert_eq!(beta_formula(&p("1,4|2|3")).unwrap(), rat(1, 3));
        assert_eq!(beta_formula(&p("1,3|2,4")).unwrap(), int(-1));
        let q = p("1,4|2,6|3|5");
        assert_eq!(beta_formula(&q).unwrap(), beta_recursive(&q).unwrap());
        assert_eq!(beta_recursive(&p("1,4|2,3")).unwrap(), rat(-1, 2));
        assert_eq!(
            beta_recursive(&p("1,3,5|2,4")).unwrap(),
            beta_formula(&p("1,3,5|2,4")).unwrap()
        );
    }

    #[test]
    fn logbessel_values() {
        let r = logbessel_beta_check(5).unwrap();
        assert_eq!(r.scaled_beta, vec!["1", "-1", "4", "-33", "456"]);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn csv_round_trip() {
        let t = beta_table(3).unwrap();
        assert_eq!(BetaTable::from_csv(&t.to_csv()).unwrap(), t);
    }
}
