//! DOT export: objects as nodes, one edge per non-identity morphism, class
//! membership as edge attributes, Grothendieck fibers grouped in clusters.

use fcat_core::fincat::FinCat;
use fcat_core::integral::IntegralStructure;
use fcat_core::modelstruct::PreModel;

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect()
}

pub fn export_category(c: &FinCat, classes: Option<&PreModel>) -> String {
    let mut out = format!("digraph \"{}\" {{\n", c.name());
    out.push_str("  rankdir=BT;\n");
    for o in c.objects() {
        out.push_str(&format!(
            "  n{} [label=\"{}\"];\n",
            sanitize(c.object_name(o)),
            c.object_name(o)
        ));
    }
    for m in c.morphisms() {
        if c.is_identity(m) {
            continue;
        }
        let mut attrs = format!("label=\"{}\"", c.morphism_name(m));
        if let Some(pm) = classes {
            attrs.push_str(&format!(
                ", weq={}, cof={}, fib={}",
                pm.is_weq(m),
                pm.is_cof(m),
                pm.is_fib(m)
            ));
        }
        out.push_str(&format!(
            "  n{} -> n{} [{}];\n",
            sanitize(c.object_name(c.source(m))),
            sanitize(c.object_name(c.target(m))),
            attrs
        ));
    }
    out.push_str("}\n");
    out
}

/// Total category of an integral structure with one cluster per base object.
pub fn export_integral(istruct: &IntegralStructure) -> String {
    let groth = istruct.groth();
    let total = istruct.total();
    let base = groth.projection().target();
    let mut out = format!("digraph \"{}\" {{\n", total.name());
    out.push_str("  rankdir=BT;\n");
    for a in base.objects() {
        out.push_str(&format!(
            "  subgraph cluster_{} {{\n    label=\"{}\";\n",
            sanitize(base.object_name(a)),
            base.object_name(a)
        ));
        for o in total.objects() {
            if groth.obj_pair(o).0 == a {
                out.push_str(&format!(
                    "    n{} [label=\"{}\"];\n",
                    sanitize(total.object_name(o)),
                    total.object_name(o)
                ));
            }
        }
        out.push_str("  }\n");
    }
    for m in total.morphisms() {
        if total.is_identity(m) {
            continue;
        }
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\", weq={}, cof={}, fib={}];\n",
            sanitize(total.object_name(total.source(m))),
            sanitize(total.object_name(total.target(m))),
            total.morphism_name(m),
            istruct.is_weq(m),
            istruct.is_cof(m),
            istruct.is_fib(m)
        ));
    }
    out.push_str("}\n");
    out
}
