use pa_core::cosetenum::*;
use pa_core::group::GroupElement;
use pa_core::word::Word;
use proptest::prelude::*;

// Spherical triangle group orders from the area formula.
fn closed_form(p: u32, q: u32, r: u32) -> Option<u32> {
    let num = 2 * p * q * r;
    let den = q * r + p * r + p * q;
    (den > p * q * r).then(|| num / (den - p * q * r))
}

#[test]
fn orders_match_area_formula() {
    let mut seen = 0;
    for p in 2..=6 {
        for q in 2..=6 {
            for r in 2..=6 {
                match closed_form(p, q, r) {
                    Some(n) => {
                        let g = triangle_group(p, q, r).unwrap();
                        assert_eq!(g.order(), n as usize, "({p},{q},{r})");
                        seen += 1;
                    }
                    None => assert!(triangle_group(p, q, r).is_err()),
                }
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn complete_tables_satisfy_relators() {
    for (p, q, r) in [(2, 2, 6), (2, 3, 5), (3, 3, 2), (5, 2, 3)] {
        let pres = Presentation::triangle(p, q, r);
        let t = enumerate(&pres, 1000).unwrap();
        assert!(t.relators_hold(&pres));
    }
    // a non-triangle presentation: the quaternion group
    let q8 = Presentation::parse(2, &["a^4", "a^2B^2", "abaB"]).unwrap();
    let t = enumerate(&q8, 100).unwrap();
    assert_eq!(t.len(), 8);
    assert!(t.relators_hold(&q8));
}

#[test]
fn tight_bounds_still_complete() {
    let pres = Presentation::triangle(2, 3, 5);
    let t = enumerate(&pres, 62).unwrap();
    assert!(t.is_complete());
    assert_eq!(t.len(), 60);
    assert_eq!(enumerate(&pres, 59).unwrap().status, TableStatus::Overflow);
}

#[test]
fn env_override_is_read() {
    std::env::set_var("PA_MAX_COSETS", "17");
    assert_eq!(default_max_cosets(), 17);
    std::env::set_var("PA_MAX_COSETS", "junk");
    assert_eq!(default_max_cosets(), DEFAULT_MAX_COSETS);
    std::env::remove_var("PA_MAX_COSETS");
}

#[test]
fn lemma_images() {
    let w = |s| Word::parse(s, 3).unwrap();
    let orders: Vec<usize> = [("b²a", (2, 2, 2)), ("b²ac²a", (2, 2, 2)), ("b²a", (2, 2, 4)), ("b²ac²a", (2, 2, 4))]
        .iter()
        .map(|(s, t)| image_order(&w(s), (2, 4, 4), *t).unwrap())
        .collect();
    assert_eq!(orders[1], 1);
    assert_eq!(orders[2], 2);
    let g = triangle_group(2, 3, 3).unwrap();
    let x = g.evaluate_str("ac⁴ac²").unwrap();
    assert_eq!(g.element_order(&x), 2);
    // (ca)⁻¹ a (ca)
    let ca = g.evaluate_str("ca").unwrap();
    assert_eq!(g.evaluate_str("a").unwrap().conj_by(&ca.inv()), x);
}

fn word_strategy() -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec(prop_oneof![Just(1), Just(2), Just(3), Just(-1), Just(-2), Just(-3)], 0..20)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn image_order_divides_group_order(w in word_strategy(), t in 0usize..4) {
        let targets = [(2, 2, 2), (2, 2, 4), (2, 4, 2), (2, 4, 4)];
        let target = targets[t];
        prop_assume!(target != (2, 4, 4));
        let g = triangle_group(target.0, target.1, target.2).unwrap();
        let n = image_order(&Word(w), (2, 4, 4), target).unwrap();
        prop_assert_eq!(g.order() % n, 0);
    }

    #[test]
    fn enumeration_is_deterministic(p in 2u32..6, q in 2u32..6, r in 2u32..6) {
        prop_assume!(is_spherical(p, q, r));
        let pres = Presentation::triangle(p, q, r);
        prop_assert_eq!(enumerate(&pres, 500).unwrap(), enumerate(&pres, 500).unwrap());
    }

    #[test]
    fn cyclic_words_act_as_their_length(n in 1usize..40, extra in 0usize..40) {
        let pres = Presentation::new(1, vec![Word(vec![1; n])]).unwrap();
        let t = enumerate(&pres, n + extra).unwrap();
        prop_assert!(t.is_complete());
        prop_assert_eq!(t.len(), n);
    }
}

