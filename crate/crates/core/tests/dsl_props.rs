mod common;

use common::{case_rng, config, Shape};
use lcw::dsl::parse_exppoly;
use proptest::prelude::*;
use rand::Rng;

fn shape(d: usize) -> Shape {
    Shape {
        d,
        max_degree: 4,
        max_frequencies: 3,
        max_terms: 5,
        height: 12,
        formal_scalars: true,
        complex_frequencies: true,
        frequency_pool: common::FREQUENCIES,
    }
}

/// Well-formed input text built from the grammar.
fn expression() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1..=3usize).prop_map(|j| format!("x{j}")),
        (0..50u32).prop_map(|n| n.to_string()),
        (1..9i32, 1..9i32).prop_map(|(p, q)| format!("{p}/{q}")),
        Just("i".to_string()),
        (-3..=3i32, 1..5i32).prop_map(|(p, q)| format!("E({p}/{q})")),
        (-3..=3i32, -3..=3i32, 0..3i32).prop_map(|(a, b, c)| format!("exp({a}*x1 + {b}*i*x2 - {c})")),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            inner.clone().prop_map(|a| format!("-{a}")),
            (inner, 0..3u32).prop_map(|(a, k)| format!("({a})^{k}")),
        ]
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn print_then_parse(case in any::<u64>()) {
        let mut r = case_rng(case);
        let d = r.gen_range(1..=3);
        let f = common::exppoly(&mut r, &shape(d));
        let text = f.to_string();
        let back = parse_exppoly(&text, Some(d)).unwrap();
        prop_assert_eq!(&back, &f, "{}", text);
    }

    #[test]
    fn parse_then_print(text in expression()) {
        let f = parse_exppoly(&text, Some(3)).unwrap();
        let printed = f.to_string();
        let again = parse_exppoly(&printed, Some(3)).unwrap();
        prop_assert_eq!(&again, &f, "{}", text);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn parse_is_total(text in "\\PC{0,60}") {
        let _ = parse_exppoly(&text, None);
    }

    #[test]
    fn parse_is_total_on_grammar_tokens(text in "(x[0-9]{1,3}|[0-9]{1,4}|i|E|exp|[-+*/^()]| ){0,40}") {
        let _ = parse_exppoly(&text, None);
    }
}
