//! Parser and print/parse roundtrip tests for the workspace format.

use fcat_cli::emit::{emit_category, emit_pre_model};
use fcat_cli::parser::parse_spec;
use fcat_core::fincat::chain;
use fcat_core::modelstruct::MorClass;

#[test]
fn poset_one_liner() {
    let (ws, soft) = parse_spec("poset I1 { order: 0 < 1 }", false).unwrap();
    assert!(soft.is_empty());
    let c = ws.category("I1").unwrap();
    assert_eq!(c.object_count(), 2);
    assert_eq!(c.morphism_count(), 3);
}

#[test]
fn chained_order_clauses() {
    let (ws, _) = parse_spec("poset C3 { order: x < y < z }", false).unwrap();
    let c = ws.category("C3").unwrap();
    assert_eq!(c.object_count(), 3);
    assert_eq!(c.morphism_count(), 6);
}

#[test]
fn model_with_class_lists() {
    let text = "poset I1 { order: 0 < 1 }\nmodel ex44 on I1 { weq: all  cof: all  fib: none }";
    let (ws, _) = parse_spec(text, false).unwrap();
    let entry = ws.model("ex44").unwrap();
    assert_eq!(entry.pre.describe_class(MorClass::Weq), "all");
    assert_eq!(entry.pre.describe_class(MorClass::Fib), "ids");
    assert!(entry.model.is_some());
}

#[test]
fn closed_keyword_closes_composition() {
    let text = "poset C3 { order: x < y < z }\nmodel m on C3 { weq: closed [x->y, y->z]  cof: all  fib: all }";
    let (ws, _) = parse_spec(text, false).unwrap();
    let entry = ws.model("m").unwrap();
    let c = ws.category("C3").unwrap();
    let composite = c.morphism_by_name("x->z").unwrap();
    assert!(entry.pre.is_weq(composite));
}

#[test]
fn literal_unclosed_class_is_rejected() {
    let text = "poset C3 { order: x < y < z }\nmodel m on C3 { weq: [x->y, y->z]  cof: all  fib: all }";
    let e = parse_spec(text, false).unwrap_err();
    assert!(e.to_string().contains("composition"), "{e}");
}

#[test]
fn unknown_arrow_in_compose_is_located() {
    let text = "category C {\n  objects: a b\n  arrow f: a -> b\n  compose g . f = f\n}";
    let e = parse_spec(text, false).unwrap_err();
    assert_eq!(e.line, 4);
    assert!(e.to_string().contains("unknown arrow `g`"));
}

#[test]
fn explicit_category_with_composition() {
    let text = "category C3 {\n  objects: x y z\n  arrow f: x -> y\n  arrow g: y -> z\n  arrow h: x -> z\n  compose g . f = h\n}";
    let (ws, _) = parse_spec(text, false).unwrap();
    let c = ws.category("C3").unwrap();
    assert_eq!(c.morphism_count(), 6);
    let f = c.morphism_by_name("f").unwrap();
    let g = c.morphism_by_name("g").unwrap();
    assert_eq!(c.compose(g, f), c.morphism_by_name("h"));
}

#[test]
fn missing_composite_is_a_validation_error() {
    let text = "category C3 {\n  objects: x y z\n  arrow f: x -> y\n  arrow g: y -> z\n}";
    let e = parse_spec(text, false).unwrap_err();
    assert!(e.to_string().contains("missing-composite"), "{e}");
}

#[test]
fn duplicate_names_are_rejected() {
    let text = "poset A { order: 0 < 1 }\nposet A { order: 0 < 1 }";
    let e = parse_spec(text, false).unwrap_err();
    assert!(e.to_string().contains("duplicate category"));
}

#[test]
fn lenient_mode_collects_validation_failures() {
    // A literal class that is not closed under composition is a validation
    // failure: lenient loading keeps the rest of the workspace and reports.
    let text = "poset C3 { order: x < y < z }\nmodel m on C3 { weq: [x->y, y->z]  cof: all  fib: all }";
    let (ws, soft) = parse_spec(text, true).unwrap();
    assert!(ws.category("C3").is_some());
    assert_eq!(soft.len(), 1);
    assert!(soft[0].contains("composition"));
    // Reference errors stay hard even in lenient mode.
    let text = "poset A { order: 0 < 1 }\nmodel m on NOPE { weq: all cof: all fib: all }";
    assert!(parse_spec(text, true).is_err());
}

#[test]
fn category_print_parse_roundtrip_is_identical() {
    let c3 = chain(3);
    let text = emit_category(&c3);
    let (ws, _) = parse_spec(&text, false).unwrap();
    let back = ws.category("chain3").unwrap();
    assert_eq!(back.as_ref(), c3.as_ref());
}

#[test]
fn model_print_parse_roundtrip_preserves_classes() {
    let text = "poset I1 { order: 0 < 1 }\nmodel ex44 on I1 { weq: all  cof: all  fib: none }";
    let (ws, _) = parse_spec(text, false).unwrap();
    let entry = ws.model("ex44").unwrap();
    let emitted = format!(
        "{}{}",
        emit_category(entry.pre.base()),
        emit_pre_model(&entry.pre, "ex44")
    );
    let (ws2, _) = parse_spec(&emitted, false).unwrap();
    let back = ws2.model("ex44").unwrap();
    assert_eq!(back.pre.base().as_ref(), entry.pre.base().as_ref());
    for class in [MorClass::Weq, MorClass::Cof, MorClass::Fib] {
        assert_eq!(back.pre.class(class), entry.pre.class(class));
    }
}

#[test]
fn isolated_points_in_posets() {
    let (ws, _) = parse_spec("poset P { order: a < b, c }", false).unwrap();
    assert_eq!(ws.category("P").unwrap().object_count(), 3);
}
