//! Worked examples for every public operation, frozen as exact values.

use cumulants::algebra::{
    bernoulli_number, faulhaber_polynomial, format_rational, rat, MomentPolynomial, MomentSymbol, Monomial, Polynomial,
    Rational, TruncatedSeries,
};
use cumulants::cumulants::{
    beta, beta_formula, beta_recursive, beta_table, boolean_poisson_kappa, convert_sequence, cumulant_poly,
    determinant_cumulants, lenczewski_sum_check, logbessel_beta_check, moment_monomial, monotone_dilate,
    partitioned_cumulant, tilde_transform, Basis, CumulantKind, DeterminantKind,
};
use cumulants::forests::{
    alpha, depth, labelling_polynomial, monotone_labelling_count, nesting_forest, tree_factorial, RootedForest,
};
use cumulants::graphs::{
    acyclic_orientations_unique_source, anti_interval_digraph, anti_interval_graph, crossing_graph, digraph_key,
    enumerate_pyramids, partition_sum_identity_check, tutte_eval, HeapMode, MixedGraph,
};
use cumulants::partitions::{
    enumerate, enumerate_monotone, mobius, triangle_geq, ComponentMode, Lattice, PartitionClass, SetPartition,
};
use cumulants::permutations::{phi, psi, psi_inverse, Permutation};
use cumulants::Error;
use num_bigint::BigUint;
use num_traits::{One, Zero};

fn p(s: &str) -> SetPartition {
    SetPartition::parse(s).unwrap()
}

fn r(s: &str) -> Rational {
    cumulants::algebra::parse_rational(s).unwrap()
}

fn series(coeffs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::new(coeffs.iter().map(|&c| rat(c, 1)).collect(), order)
}

fn sym(elements: &[usize]) -> MomentSymbol {
    MomentSymbol::new(elements).unwrap()
}

fn mono(n: usize, factors: &[&[usize]], c: i64) -> MomentPolynomial {
    MomentPolynomial::term(n, Monomial::new(factors.iter().map(|f| sym(f)).collect()), rat(c, 1))
}

fn t10(g: &MixedGraph) -> Rational {
    tutte_eval(g, &Rational::one(), &Rational::zero())
}

#[test]
fn faulhaber_and_bernoulli() {
    assert_eq!(faulhaber_polynomial(0), Polynomial::var('N'));
    assert_eq!(faulhaber_polynomial(1).coeffs(), &[rat(0, 1), rat(1, 2), rat(1, 2)]);
    assert_eq!(faulhaber_polynomial(3).eval(&rat(4, 1)), rat(100, 1));
    assert_eq!(bernoulli_number(0), rat(1, 1));
    assert_eq!(bernoulli_number(1), rat(1, 2));
    assert_eq!(bernoulli_number(2), rat(1, 6));
}

#[test]
fn series_operations() {
    let geometric = series(&[1, 1, 1, 1], 3);
    let g = series(&[0, 1, 1], 3);
    assert_eq!(
        geometric.compose(&g).unwrap().coeffs(),
        series(&[1, 1, 2, 3], 3).coeffs()
    );
    assert!(matches!(geometric.compose(&series(&[1, 1], 3)), Err(Error::Series(_))));
    assert_eq!(series(&[1, -1], 3).reciprocal().unwrap().coeffs(), geometric.coeffs());
    assert_eq!(
        series(&[1, -1, -1], 4).reciprocal().unwrap().coeffs(),
        series(&[1, 1, 2, 3, 5], 4).coeffs()
    );
    assert!(series(&[0, 1], 3).reciprocal().is_err());
    let mercator = series(&[1, -1], 3).log().unwrap();
    assert_eq!(mercator.coeffs(), &[rat(0, 1), rat(-1, 1), rat(-1, 2), rat(-1, 3)]);
    let e = TruncatedSeries::from_fn(4, |k| {
        Rational::one() / Rational::from_integer(cumulants::algebra::factorial(k).into())
    });
    assert_eq!(e.log().unwrap().coeffs(), TruncatedSeries::z(4).coeffs());
    assert!(series(&[2, 1], 3).log().is_err());
}

#[test]
fn moment_monomials() {
    assert_eq!(moment_monomial(&p("1")), mono(1, &[&[1]], 1));
    assert_eq!(moment_monomial(&SetPartition::one(3)), mono(3, &[&[1, 2, 3]], 1));
    assert_eq!(moment_monomial(&p("1,3|2")), mono(3, &[&[1, 3], &[2]], 1));
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate(4, PartitionClass::All).unwrap().len(), 15);
    assert_eq!(enumerate(4, PartitionClass::Noncrossing).unwrap().len(), 14);
    for class in PartitionClass::ALL {
        assert_eq!(enumerate(1, class).unwrap(), vec![p("1")]);
    }
    assert_eq!(enumerate_monotone(1).unwrap().len(), 1);
    assert_eq!(enumerate_monotone(2).unwrap().len(), 3);
    assert_eq!(enumerate_monotone(3).unwrap().len(), 12);
    assert!(matches!(
        enumerate(40, PartitionClass::All),
        Err(Error::LimitExceeded { .. })
    ));
}

#[test]
fn classification_examples() {
    let f = p("1,3|2,4").classify();
    assert!(!f.noncrossing && f.connected && f.irreducible && !f.interval);
    let f = p("1,2|3").classify();
    assert!(f.noncrossing && f.interval && !f.irreducible && !f.connected);
    let f = p("1,7|2,4|3,5|6,8,9").classify();
    assert!(f.irreducible && !f.connected);
}

#[test]
fn closures_components_and_lattice() {
    assert_eq!(p("1,3|2,4").noncrossing_closure(), p("1,2,3,4"));
    assert_eq!(p("1,4|2,3").noncrossing_closure(), p("1,4|2,3"));
    assert_eq!(p("1,4|2,6|3|5").noncrossing_closure(), p("1,2,4,6|3|5"));
    assert_eq!(p("1,3|2").interval_closure(), p("1,2,3"));
    assert_eq!(p("1,2|3,5|4").interval_closure(), p("1,2|3,4,5"));

    assert_eq!(p("1,2|3,4").components(ComponentMode::Irreducible).len(), 2);
    assert_eq!(p("1,3|2,4").components(ComponentMode::Irreducible).len(), 1);
    let parts = p("1,3|2|4,5").components(ComponentMode::Irreducible);
    assert_eq!(parts[0], (vec![1, 2, 3], p("1,3|2")));
    assert_eq!(parts[1], (vec![4, 5], p("1,2")));

    assert_eq!(p("1,2|3").meet(&p("1|2,3")).unwrap(), SetPartition::zero(3));
    assert_eq!(p("1,3|2|4").join(&p("1|2,4|3")).unwrap(), p("1,3|2,4"));
    assert!(matches!(p("1,2").meet(&p("1|2|3")), Err(Error::SizeMismatch { .. })));

    assert!(!triangle_geq(&SetPartition::one(4), &p("1,3|2,4")).unwrap());
    assert!(triangle_geq(&p("1,3|2,4"), &p("1,3|2,4")).unwrap());
    assert!(triangle_geq(&p("1,2,3|4,5"), &p("1,3|2|4,5")).unwrap());

    assert_eq!(p("1,3|2,4").restrict(&[1, 2, 3, 4]).unwrap(), p("1,3|2,4"));
    assert_eq!(p("1,3|2,4").restrict(&[1, 2, 3]).unwrap(), p("1,3|2"));
    let fig3 = p("1,10|2,6|3,5|4,7|8,16|9,12|11,14|13,15");
    assert_eq!(fig3.restrict(&[2, 3, 5, 6]).unwrap(), p("1,4|2,3"));
    assert!(fig3.restrict(&[]).is_err());
}

#[test]
fn mobius_examples() {
    assert_eq!(
        mobius(&SetPartition::zero(3), &SetPartition::one(3), Lattice::I).unwrap(),
        rat(1, 1)
    );
    assert_eq!(
        mobius(&SetPartition::zero(4), &SetPartition::one(4), Lattice::P).unwrap(),
        rat(-6, 1)
    );
    assert_eq!(
        mobius(&SetPartition::zero(4), &SetPartition::one(4), Lattice::NC).unwrap(),
        rat(-5, 1)
    );
    assert!(mobius(&SetPartition::one(3), &SetPartition::zero(3), Lattice::P).is_err());
    assert!(mobius(&p("1,3|2"), &SetPartition::one(3), Lattice::I).is_err());
}

#[test]
fn forest_examples() {
    let single = nesting_forest(&SetPartition::one(4)).unwrap();
    assert_eq!(single.trees.len(), 1);
    assert_eq!(single.size(), 1);
    let path = nesting_forest(&p("1,4|2,3")).unwrap();
    assert_eq!((path.trees.len(), path.height()), (1, 2));
    let fig2 = nesting_forest(&p("1,2,10|3,6|4,5|7|8,9|11,14,18|12,13|15,17|16")).unwrap();
    let sizes: Vec<usize> = fig2.trees.iter().map(|t| t.size()).collect();
    assert_eq!(sizes, vec![5, 4]);
    assert!(matches!(nesting_forest(&p("1,3|2,4")), Err(Error::InvalidPartition(_))));

    let f = |parents: &[Option<usize>]| RootedForest::from_parents(parents).unwrap();
    assert_eq!(f(&[None]).tree_factorial(), BigUint::from(1u32));
    assert_eq!(f(&[None, Some(0), Some(1)]).tree_factorial(), BigUint::from(6u32));
    assert_eq!(f(&[None, Some(0), Some(0)]).tree_factorial(), BigUint::from(3u32));
    assert_eq!(tree_factorial(&p("1,4|2|3")).unwrap(), BigUint::from(3u32));

    assert_eq!(
        monotone_labelling_count(&SetPartition::one(5)).unwrap(),
        BigUint::from(1u32)
    );
    assert_eq!(monotone_labelling_count(&p("1,4|2|3")).unwrap(), BigUint::from(2u32));
    assert_eq!(
        monotone_labelling_count(&p("1,2|3|4,5|6")).unwrap(),
        BigUint::from(24u32)
    );

    assert_eq!(f(&[None]).labelling_polynomial(), Polynomial::var('N'));
    let path4 = f(&[None, Some(0), Some(1), Some(2)]).labelling_polynomial();
    for n in 0..8i64 {
        let binom = (0..4).fold(rat(1, 1), |acc, i| acc * rat(n + 3 - i, 1)) / rat(24, 1);
        assert_eq!(path4.eval(&rat(n, 1)), binom);
    }
    assert_eq!(
        f(&[None, Some(0), Some(0)]).labelling_polynomial().eval(&rat(2, 1)),
        rat(5, 1)
    );
    assert_eq!(
        labelling_polynomial(&SetPartition::one(3)).unwrap(),
        Polynomial::var('N')
    );

    assert_eq!(alpha(&SetPartition::one(3)).unwrap(), rat(1, 1));
    assert_eq!(alpha(&p("1,4|2|3")).unwrap(), rat(1, 6));
    assert_eq!(alpha(&p("1,6|2,5|3,4")).unwrap(), rat(1, 3));
    assert_eq!(alpha(&p("1,2|3")).unwrap(), rat(0, 1));

    assert_eq!(depth(&SetPartition::one(3)).unwrap(), 1);
    assert_eq!(depth(&p("1,4|2,3")).unwrap(), 2);
    assert_eq!(depth(&p("1,6|2,5|3,4")).unwrap(), 3);
    assert!(depth(&p("1,3|2,4")).is_err());
}

#[test]
fn graph_examples() {
    assert_eq!(crossing_graph(&p("1,4|2,3|5")).num_edges(), 0);
    assert_eq!(crossing_graph(&p("1,3|2,4")).undirected, vec![[0, 1]]);
    let fig3 = p("1,10|2,6|3,5|4,7|8,16|9,12|11,14|13,15");
    assert_eq!(crossing_graph(&fig3).num_edges(), 6);
    assert_eq!(anti_interval_graph(&fig3).num_edges(), 13);
    assert_eq!(anti_interval_graph(&p("1,2|3|4,5")).num_edges(), 0);
    assert_eq!(anti_interval_graph(&p("1,3|2")).undirected, vec![[0, 1]]);
    let d = anti_interval_digraph(&p("1,4|2,3"));
    assert_eq!((d.directed.clone(), d.undirected.len()), (vec![[0, 1]], 0));
    let d = anti_interval_digraph(&p("1,3|2,4"));
    assert_eq!((d.directed.len(), d.undirected.clone()), (0, vec![[0, 1]]));
}

#[test]
fn crossing_blocks_get_undirected_edges_even_when_hulls_nest() {
    // {2,4} lies inside the hull of {1,3,5} but crosses it.
    let d = anti_interval_digraph(&p("1,3,5|2,4"));
    assert!(d.directed.is_empty());
    assert_eq!(d.undirected, vec![[0, 1]]);
    let nested = anti_interval_digraph(&p("1,4|2,3"));
    assert_ne!(digraph_key(&d), digraph_key(&nested));
    assert_eq!(beta(&p("1,3,5|2,4")).unwrap(), rat(-1, 1));
    assert_eq!(beta(&p("1,4|2,3")).unwrap(), rat(-1, 2));
}

#[test]
fn tutte_and_orientations() {
    let triangle = MixedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let k2 = MixedGraph::from_edges(2, &[(0, 1)]).unwrap();
    assert_eq!(tutte_eval(&MixedGraph::new(3), &rat(5, 1), &rat(-2, 1)), rat(1, 1));
    assert_eq!(t10(&k2), rat(1, 1));
    assert_eq!(t10(&triangle), rat(2, 1));
    for v in 0..2 {
        assert_eq!(acyclic_orientations_unique_source(&k2, v).unwrap().count, 1);
    }
    for v in 0..3 {
        assert_eq!(acyclic_orientations_unique_source(&triangle, v).unwrap().count, 2);
    }
    let split = acyclic_orientations_unique_source(&MixedGraph::new(2), 0).unwrap();
    assert!(split.disconnected && split.count == 0);

    assert_eq!(
        enumerate_pyramids(&SetPartition::one(4), HeapMode::Crossing)
            .unwrap()
            .len(),
        1
    );
    assert_eq!(
        enumerate_pyramids(&SetPartition::one(4), HeapMode::Interval)
            .unwrap()
            .len(),
        1
    );
    assert_eq!(enumerate_pyramids(&p("1,3|2,4"), HeapMode::Crossing).unwrap().len(), 1);
    let fig5 = p("1,4,8|2,5|3,7|6,11|9,10");
    let count = enumerate_pyramids(&fig5, HeapMode::Interval).unwrap().len();
    assert_eq!(rat(count as i64, 1), t10(&anti_interval_graph(&fig5)));
    assert!(enumerate_pyramids(&p("1,2|3"), HeapMode::Interval).is_err());

    assert_eq!(
        partition_sum_identity_check(&MixedGraph::new(1), &rat(0, 1)).unwrap(),
        rat(1, 1)
    );
    assert_eq!(partition_sum_identity_check(&k2, &rat(0, 1)).unwrap(), rat(1, 1));
    assert_eq!(
        partition_sum_identity_check(&MixedGraph::new(2), &rat(0, 1)).unwrap(),
        rat(0, 1)
    );
    assert!(partition_sum_identity_check(&k2, &rat(1, 1)).is_err());
}

#[test]
fn permutation_examples() {
    let (runs, d) = Permutation::identity(5).runs();
    assert_eq!((runs, d), (SetPartition::one(5), 0));
    let (runs, d) = Permutation::new(vec![4, 3, 2, 1]).unwrap().runs();
    assert_eq!((runs, d), (SetPartition::zero(4), 3));
    let (runs, d) = Permutation::new(vec![1, 3, 2, 4]).unwrap().runs();
    assert_eq!((runs, d), (p("1,3|2,4"), 1));

    let sigma = Permutation::parse_cycles("(1,3)(2,5,7,4,6)(8,9)", None).unwrap();
    assert_eq!(sigma.cycle_runs(), p("1,3|2,5,7|4,6|8,9"));
    assert_eq!(Permutation::identity(4).cycle_runs(), SetPartition::zero(4));
    let full = Permutation::parse_cycles("(1,2,3,4,5)", None).unwrap();
    assert_eq!(full.cycle_runs(), SetPartition::one(5));

    let heap = psi(&full).unwrap();
    assert_eq!(heap.base, SetPartition::one(5));
    assert_eq!(psi_inverse(&heap).unwrap(), full);
    let fig7 = Permutation::parse_cycles("(1,6,12,4,10,7,13,9,11,3,8,2,5)", None).unwrap();
    let heap = psi(&fig7).unwrap();
    assert_eq!(heap.base, p("1,6,12|2,5|3,8|4,10|7,13|9,11"));
    assert!(heap.is_pyramid());
    assert_eq!(psi_inverse(&heap).unwrap(), fig7);
    assert!(psi(&Permutation::identity(3)).is_err());

    assert!(phi(&Permutation::identity(3)).is_err());
    let sigma = Permutation::parse_cycles("(1,3,2)", None).unwrap();
    let image = phi(&sigma).unwrap();
    assert_ne!(image, sigma);
    assert_eq!(phi(&image).unwrap(), sigma);
}

#[test]
fn cumulant_polynomial_examples() {
    for kind in CumulantKind::ALL {
        assert_eq!(cumulant_poly(kind, 1).unwrap(), mono(1, &[&[1]], 1));
        let mut k2 = mono(2, &[&[1, 2]], 1);
        k2.add_scaled(&mono(2, &[&[1], &[2]], 1), &rat(-1, 1));
        assert_eq!(cumulant_poly(kind, 2).unwrap(), k2);
    }
    let mut b3 = mono(3, &[&[1, 2, 3]], 1);
    b3.add_scaled(&mono(3, &[&[1, 2], &[3]], 1), &rat(-1, 1));
    b3.add_scaled(&mono(3, &[&[1], &[2, 3]], 1), &rat(-1, 1));
    b3.add_scaled(&mono(3, &[&[1], &[2], &[3]], 1), &rat(1, 1));
    assert_eq!(cumulant_poly(CumulantKind::Boolean, 3).unwrap(), b3);
    assert!(matches!(
        cumulant_poly(CumulantKind::Classical, 30),
        Err(Error::LimitExceeded { .. })
    ));

    assert_eq!(
        partitioned_cumulant(CumulantKind::Free, &SetPartition::zero(3)).unwrap(),
        mono(3, &[&[1], &[2], &[3]], 1)
    );
    assert_eq!(
        partitioned_cumulant(CumulantKind::Monotone, &SetPartition::one(4)).unwrap(),
        cumulant_poly(CumulantKind::Monotone, 4).unwrap()
    );
    let mut expected = mono(3, &[&[1, 3], &[2]], 1);
    expected.add_scaled(&mono(3, &[&[1], &[2], &[3]], 1), &rat(-1, 1));
    assert_eq!(
        partitioned_cumulant(CumulantKind::Classical, &p("1,3|2")).unwrap(),
        expected
    );
}

#[test]
fn beta_examples() {
    assert_eq!(beta_recursive(&SetPartition::one(3)).unwrap(), rat(1, 1));
    assert_eq!(beta_recursive(&p("1,2|3,4")).unwrap(), rat(0, 1));
    assert_eq!(beta_recursive(&p("1,6|2,5|3,4")).unwrap(), rat(2, 3));
    assert_eq!(beta_formula(&p("1,4|2|3")).unwrap(), rat(1, 3));
    assert_eq!(beta_formula(&p("1,3|2,4")).unwrap(), rat(-1, 1));
    let pi = p("1,4|2,6|3|5");
    assert_eq!(beta_formula(&pi).unwrap(), beta_recursive(&pi).unwrap());

    let t2 = beta_table(2).unwrap();
    assert_eq!(t2.get(&SetPartition::one(2)), Some(&rat(1, 1)));
    assert_eq!(t2.get(&SetPartition::zero(2)), Some(&rat(0, 1)));
    let t3 = beta_table(3).unwrap();
    assert!(t3
        .rows
        .iter()
        .all(|row| row.beta.is_zero() || row.partition.is_irreducible()));
    assert_eq!(beta_table(4).unwrap().get(&p("1,4|2,3")), Some(&rat(-1, 2)));

    let report = logbessel_beta_check(4).unwrap();
    assert_eq!(report.scaled_beta, vec!["1", "-1", "4", "-33"]);
    assert!(report.holds && report.carlitz_holds);
}

#[test]
fn univariate_examples() {
    let moments = Basis::Moments;
    let zero = vec![rat(0, 1); 5];
    for kind in CumulantKind::ALL {
        assert_eq!(convert_sequence(moments, kind.into(), &zero).unwrap(), zero);
        assert_eq!(convert_sequence(kind.into(), kind.into(), &zero).unwrap(), zero);
    }
    let h = [r("1/2"), r("-3"), r("2/5"), r("7")];
    assert_eq!(monotone_dilate(&h, &rat(0, 1)).unwrap(), vec![rat(0, 1); 4]);
    assert_eq!(
        monotone_dilate(&h, &rat(1, 1)).unwrap(),
        convert_sequence(CumulantKind::Monotone.into(), moments, &h).unwrap()
    );
    let m = convert_sequence(CumulantKind::Monotone.into(), moments, &h).unwrap();
    assert_eq!(monotone_dilate(&h, &rat(-1, 1)).unwrap(), tilde_transform(&m).unwrap());

    let x = Polynomial::var('x');
    assert_eq!(boolean_poisson_kappa(1).unwrap(), x);
    assert_eq!(boolean_poisson_kappa(3).unwrap(), &x * &(&Polynomial::one('x') - &x));
    assert_eq!(boolean_poisson_kappa(4).unwrap().eval(&rat(1, 1)), rat(-2, 1));

    let m = [r("3"), r("1/2")];
    let kappa = determinant_cumulants(DeterminantKind::Classical, &m).unwrap();
    assert_eq!(kappa, vec![rat(3, 1), rat(-17, 2)]);
    let powers: Vec<Rational> = (0..8).map(|k| rat(1 << k, 1)).collect();
    assert_eq!(
        determinant_cumulants(DeterminantKind::Boolean, &powers).unwrap(),
        vec![rat(1, 1); 8]
    );

    let ones = vec![rat(1, 1); 6];
    let free = convert_sequence(moments, CumulantKind::Free.into(), &ones).unwrap();
    assert_eq!(free[0], rat(1, 1));
    assert!(free[1..].iter().all(Zero::is_zero));
    let from_boolean = convert_sequence(CumulantKind::Boolean.into(), moments, &ones).unwrap();
    assert_eq!(from_boolean, powers[..6].to_vec());
    assert_eq!(
        from_boolean.iter().map(format_rational).collect::<Vec<_>>(),
        ["1", "2", "4", "8", "16", "32"]
    );
}

#[test]
fn lenczewski_examples() {
    assert!(lenczewski_sum_check(4, 1).unwrap().holds);
    assert!(lenczewski_sum_check(2, 3).unwrap().holds);
    assert!(lenczewski_sum_check(4, 3).unwrap().holds);
}
