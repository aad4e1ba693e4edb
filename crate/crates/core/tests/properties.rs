use proptest::prelude::*;

use superdiag::coinvariants::trace_regular;
use superdiag::combinatorics::{partitions_of, Partition, Permutation};
use superdiag::macdonald::{ek_pleth, hhl_htilde};
use superdiag::superring::{enumerate_monomials, TriDegree};
use superdiag::Rational;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn regular_trace_is_a_class_function(
        (sigma, tau) in (1usize..=5).prop_flat_map(|n| (permutation(n), permutation(n))),
        a in 0usize..4, b in 0usize..4, c in 0usize..4,
    ) {
        let d = TriDegree::new(a, b, c);
        let conj = tau.compose(&sigma).compose(&tau.inverse());
        prop_assert_eq!(trace_regular(&sigma, d), trace_regular(&conj, d));
    }

    #[test]
    fn regular_trace_counts_signed_fixed_monomials(
        sigma in (1usize..=4).prop_flat_map(permutation),
        a in 0usize..3, b in 0usize..3, c in 0usize..4,
    ) {
        let d = TriDegree::new(a, b, c);
        let fixed: i64 = enumerate_monomials(sigma.degree(), d)
            .iter()
            .map(|m| {
                let (s, image) = m.permute(&sigma);
                if &image == m { s } else { 0 }
            })
            .sum();
        prop_assert_eq!(trace_regular(&sigma, d), fixed);
    }

    #[test]
    fn conjugation_is_an_involution(mu in partition(12)) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn htilde_symmetry(mu in partition(5)) {
        let h = hhl_htilde::<Rational>(&mu).unwrap();
        prop_assert_eq!(h.swap_qt(), hhl_htilde::<Rational>(&mu.conjugate()).unwrap());
    }

    #[test]
    fn ek_pleth_at_one_is_binomial(mu in partition(7), k in 0usize..7) {
        let n = mu.size();
        prop_assume!(k < n);
        let one = Rational::from_integer(1.into());
        let v = ek_pleth::<Rational>(&mu, k).unwrap().evaluate(&one, &one, &one);
        let expected = superdiag::superring::binomial(n - 1, k) as i64;
        prop_assert_eq!(v, Rational::from_integer(expected.into()));
    }
}
