use super::*;
use crate::combinatorics::partitions_of;
use crate::superring::enumerate_monomials;
use num_rational::BigRational;

type Q = BigRational;

fn d(a: usize, b: usize, c: usize) -> TriDegree {
    TriDegree::new(a, b, c)
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn swap() -> Permutation {
    Permutation::from_one_line(&[2, 1]).unwrap()
}

/// Sum of signs over monomials fixed up to sign.
fn trace_by_enumeration(sigma: &Permutation, deg: TriDegree) -> i64 {
    enumerate_monomials(sigma.degree(), deg)
        .iter()
        .map(|m| {
            let (s, image) = m.permute(sigma);
            if &image == m {
                s
            } else {
                0
            }
        })
        .sum()
}

#[test]
fn ideal_component_examples() {
    assert_eq!(ideal_component::<Q>(2, d(0, 0, 1)).rank(), 1);
    assert_eq!(ideal_component::<Q>(2, d(1, 0, 1)).rank(), 4);
    assert_eq!(ideal_component::<Q>(1, d(1, 0, 0)).rank(), 1);
}

#[test]
fn trace_regular_examples() {
    assert_eq!(trace_regular(&swap(), d(0, 0, 2)), -1);
    assert_eq!(trace_regular(&swap(), d(0, 0, 1)), 0);
    for n in 1..=3 {
        for deg in [d(0, 0, 0), d(2, 1, 1), d(1, 3, 2)] {
            assert_eq!(
                trace_regular(&Permutation::identity(n), deg),
                component_dim(n, deg) as i64
            );
        }
    }
}

#[test]
fn trace_regular_matches_enumeration() {
    for n in 1..=4 {
        for sigma in Permutation::all(n) {
            for a in 0..=3 {
                for b in 0..=2 {
                    for c in 0..=n {
                        let deg = d(a, b, c);
                        assert_eq!(trace_regular(&sigma, deg), trace_by_enumeration(&sigma, deg));
                    }
                }
            }
        }
    }
}

#[test]
fn character_quotient_examples() {
    let id2 = Permutation::of_cycle_type(&p("1,1"));
    assert_eq!(character_quotient::<Q>(&id2, d(0, 0, 1)).unwrap(), 1);
    assert_eq!(character_quotient::<Q>(&swap(), d(0, 0, 1)).unwrap(), -1);
    assert_eq!(character_quotient::<Q>(&Permutation::identity(1), d(0, 0, 0)).unwrap(), 1);
}

#[test]
fn character_is_a_class_function() {
    let deg = d(1, 1, 1);
    let a = Permutation::from_one_line(&[2, 1, 3]).unwrap();
    let b = Permutation::from_one_line(&[1, 3, 2]).unwrap();
    assert_eq!(
        character_quotient::<Q>(&a, deg).unwrap(),
        character_quotient::<Q>(&b, deg).unwrap()
    );
}

#[test]
fn support_examples() {
    let engine = ModuleEngine::<Q>::new(2);
    let ex = explore_module(&engine, &ExploreOptions::for_n(2), None).unwrap();
    assert!(ex.is_complete());
    let row = |c: usize| -> Vec<TriDegree> { ex.nonzero().map(|ch| ch.degree).filter(|g| g.c == c).collect() };
    assert_eq!(row(1), vec![d(0, 0, 1)]);
    assert!(row(2).is_empty());
    let engine1 = ModuleEngine::<Q>::new(1);
    let ex1 = explore_module(&engine1, &ExploreOptions::for_n(1), None).unwrap();
    assert_eq!(ex1.nonzero().map(|ch| ch.degree).collect::<Vec<_>>(), vec![d(0, 0, 0)]);
}

#[test]
fn frobenius_examples() {
    let f1 = frobenius_module::<Q>(1).unwrap();
    assert_eq!(f1.to_string(), "s(1): 1\n");
    let f2 = frobenius_module::<Q>(2).unwrap();
    assert_eq!(f2.to_string(), "s(2): 1\ns(1,1): t + q + z\n");
    let f3 = frobenius_module::<Q>(3).unwrap();
    let z0 = f3.specialize(crate::frobenius::Specialization::ZEqualsZero);
    assert_eq!(z0.total_dimension(), Q::from_int(16));
}

#[test]
fn engine_agrees_with_reference_route() {
    for n in 1..=3 {
        let engine = ModuleEngine::<Q>::new(n);
        for a in 0..=3 {
            for b in 0..=(3 - a) {
                for c in 0..=n {
                    let deg = d(a, b, c);
                    let comp = engine.component(deg);
                    let reference = ideal_component::<Q>(n, deg);
                    assert_eq!(comp.ideal_rank(), reference.rank(), "n={n} d={deg}");
                    let ch = component_character(n, &comp).unwrap();
                    for mu in partitions_of(n) {
                        let sigma = Permutation::of_cycle_type(&mu);
                        assert_eq!(
                            ch.values[&mu],
                            character_quotient::<Q>(&sigma, deg).unwrap(),
                            "n={n} d={deg} mu={mu}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn normal_forms_represent_classes() {
    // m - NF(m) must lie in the ideal, checked against the reference basis
    let n = 3;
    let engine = ModuleEngine::<Q>::new(n);
    for deg in [d(1, 1, 1), d(2, 0, 1), d(1, 0, 2)] {
        let comp = engine.component(deg);
        let reference = ideal_component::<Q>(n, deg);
        let std: Vec<_> = comp.standard_monomials().cloned().collect();
        for m in comp.monomials() {
            let mut f = crate::superring::SuperPolynomial::from_monomial(m.clone(), Q::from_int(1));
            for (pos, c) in comp.normal_form(m).entries() {
                f.add_term(std[*pos].clone(), -c.clone());
            }
            assert!(reference.contains(&f), "d={deg} m={m}");
        }
    }
}

#[test]
fn ideal_is_stable_exhaustively_for_small_n() {
    for n in 1..=3 {
        let engine = ModuleEngine::<Q>::new(n);
        let perms = Permutation::all(n);
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=n {
                    assert!(ideal_is_stable(&engine, d(a, b, c), &perms));
                }
            }
        }
    }
}

#[test]
fn stored_characters_are_reused() {
    use std::collections::HashMap;
    use std::sync::Mutex;

    #[derive(Default)]
    struct Memory(Mutex<HashMap<TriDegree, QuotientCharacter>>, Mutex<usize>);
    impl CharacterStore for Memory {
        fn load(&self, _n: usize, d: TriDegree) -> Option<QuotientCharacter> {
            self.0.lock().unwrap().get(&d).cloned()
        }
        fn store(&self, ch: &QuotientCharacter) {
            *self.1.lock().unwrap() += 1;
            self.0.lock().unwrap().insert(ch.degree, ch.clone());
        }
    }

    let mem = Memory::default();
    let opts = ExploreOptions::for_n(3);
    let cold = explore_module(&ModuleEngine::<Q>::new(3), &opts, Some(&mem)).unwrap();
    let writes = *mem.1.lock().unwrap();
    let engine = ModuleEngine::<Q>::new(3);
    let warm = explore_module(&engine, &opts, Some(&mem)).unwrap();
    assert_eq!(*mem.1.lock().unwrap(), writes);
    assert!(engine.cached(d(0, 0, 0)).is_none());
    assert_eq!(cold.components, warm.components);
    assert_eq!(cold.rows, warm.rows);
}

#[test]
fn hilbert_series_counts_dimensions() {
    let engine = ModuleEngine::<Q>::new(2);
    let ex = explore_module(&engine, &ExploreOptions::for_n(2), None).unwrap();
    assert_eq!(ex.hilbert_series::<Q>().to_string(), "1 + t + q + z");
    assert_eq!(ex.frobenius::<Q>().unwrap().hilbert_series(), ex.hilbert_series());
}

#[test]
fn expired_deadline_reports_incomplete() {
    let engine = ModuleEngine::<Q>::new(2);
    let opts = ExploreOptions {
        deadline: Some(Instant::now()),
        ..ExploreOptions::for_n(2)
    };
    let ex = explore_module(&engine, &opts, None).unwrap();
    assert!(!ex.is_complete());
    assert_eq!(ex.rows[0].status, RowStatus::Deadline);
}
