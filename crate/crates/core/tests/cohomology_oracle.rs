mod oracle;

use bihom_core::algebra::Representation;
use bihom_core::cochains::cohomology_dim;
use bihom_core::compatible::compatible_cohomology_dim;
use bihom_core::corpus;

#[test]
fn single_bracket_cohomology_matches_oracle() {
    for (name, a) in corpus::regular_algebras() {
        let v = Representation::adjoint(&a);
        let data = oracle::Data::new(&a, &v, 0, 0);
        for n in 0..=2 {
            let expected = oracle::cohomology(&data, n);
            assert_eq!(cohomology_dim(&a, &v, n, 0, 0).unwrap(), expected, "{name} H^{n}");
        }
    }
}

#[test]
fn compatible_cohomology_matches_oracle() {
    for (name, p) in corpus::compatible_pairs() {
        let v = Representation::adjoint(p.algebra());
        let (first, second) = oracle::adjoint_pair_data(&p);
        for n in 0..=2 {
            let expected = oracle::compatible_cohomology(&first, &second, n);
            assert_eq!(
                compatible_cohomology_dim(&p, &v, n).unwrap(),
                expected,
                "{name} H^{n}_c"
            );
        }
    }
}

#[test]
fn oracle_reproduces_forced_abelian_values() {
    let a = corpus::abelian(1);
    let data = oracle::Data::new(&a, &Representation::adjoint(&a), 0, 0);
    let dims: Vec<usize> = (0..=2).map(|n| oracle::cohomology(&data, n)).collect();
    assert_eq!(dims, vec![1, 1, 0]);
}
