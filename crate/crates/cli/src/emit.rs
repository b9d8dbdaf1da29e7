//! Emission of workspace objects back into the text format. Reparsing the
//! output yields identical objects, identifier for identifier.

use fcat_core::fincat::FinCat;
use fcat_core::modelstruct::{ModelCat, MorClass, PreModel};

pub fn emit_category(c: &FinCat) -> String {
    let mut out = format!("category {} {{\n", c.name());
    out.push_str("  objects:");
    for o in c.objects() {
        out.push(' ');
        out.push_str(c.object_name(o));
    }
    out.push('\n');
    for m in c.morphisms() {
        if c.is_identity(m) {
            continue;
        }
        out.push_str(&format!(
            "  arrow {}: {} -> {}\n",
            c.morphism_name(m),
            c.object_name(c.source(m)),
            c.object_name(c.target(m))
        ));
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            if c.is_identity(g) || c.is_identity(f) {
                continue;
            }
            if let Some(gf) = c.compose(g, f) {
                out.push_str(&format!(
                    "  compose {} . {} = {}\n",
                    c.morphism_name(g),
                    c.morphism_name(f),
                    c.morphism_name(gf)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn emit_class(pm: &PreModel, class: MorClass) -> String {
    let base = pm.base();
    let set = pm.class(class);
    if set.len() == base.morphism_count() {
        return "all".into();
    }
    let non_id: Vec<&str> = set
        .iter()
        .filter(|&&m| !base.is_identity(m))
        .map(|&m| base.morphism_name(m))
        .collect();
    if non_id.is_empty() {
        "none".into()
    } else {
        format!("[{}]", non_id.join(", "))
    }
}

pub fn emit_pre_model(pm: &PreModel, name: &str) -> String {
    let mut out = format!("model {} on {} {{\n", name, pm.base().name());
    out.push_str(&format!("  weq: {}\n", emit_class(pm, MorClass::Weq)));
    out.push_str(&format!("  cof: {}\n", emit_class(pm, MorClass::Cof)));
    out.push_str(&format!("  fib: {}\n", emit_class(pm, MorClass::Fib)));
    out.push_str("}\n");
    out
}

pub fn emit_model(mc: &ModelCat, name: &str) -> String {
    let pm = mc.structure();
    let base = pm.base();
    let mut out = format!("model {} on {} {{\n", name, base.name());
    out.push_str(&format!("  weq: {}\n", emit_class(pm, MorClass::Weq)));
    out.push_str(&format!("  cof: {}\n", emit_class(pm, MorClass::Cof)));
    out.push_str(&format!("  fib: {}\n", emit_class(pm, MorClass::Fib)));
    for m in base.morphisms() {
        if !base.is_identity(m) {
            out.push_str(&format!(
                "  factor1 {} = {}\n",
                base.morphism_name(m),
                base.object_name(mc.fact_cof_trivfib().middle(m))
            ));
            out.push_str(&format!(
                "  factor2 {} = {}\n",
                base.morphism_name(m),
                base.object_name(mc.fact_trivcof_fib().middle(m))
            ));
        }
    }
    out.push_str("}\n");
    out
}
