//! Classification of total morphisms into the three integral classes.

use super::ModCatFunctor;
use crate::fincat::MorId;
use crate::grothendieck::GrothCat;
use crate::modelstruct::ReplacementKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegralFlags {
    pub weq: bool,
    pub fib: bool,
    pub cof: bool,
}

/// Classify a total morphism `(f, φ): (A,X) → (B,Y)`:
/// - weak equivalence: `f` is one in the base and `f_!(X^cof) → f_!X → Y` is
///   one in the fiber over `B`;
/// - fibration: `f` is one and the transpose `φ^ad: X → f^*Y` is one in the
///   fiber over `A`;
/// - cofibration: `f` is one and `φ: f_!X → Y` is one in the fiber over `B`.
pub fn classify_integral(fm: &ModCatFunctor, groth: &GrothCat, m: MorId) -> IntegralFlags {
    let total = groth.total();
    let base = fm.base();
    let (f, phi) = groth.mor_pair(m);
    let (a, x) = groth.obj_pair(total.source(m));
    let (b, _y) = groth.obj_pair(total.target(m));
    debug_assert_eq!(base.source(f), a);
    debug_assert_eq!(base.target(f), b);
    let fiber_a = fm.fiber_model(a);
    let fiber_b = fm.fiber_model(b);
    let adj = fm.underlying().on_arrow(f);

    let weq = fm.base_pre().is_weq(f) && {
        let (_, rho) = fiber_a.replacement(x, ReplacementKind::Cofibrant);
        let pushed_rho = adj.left().apply_mor(rho);
        let composite = fiber_b
            .base()
            .compose(phi, pushed_rho)
            .expect("replacement leg composes with φ");
        fiber_b.is_weq(composite)
    };
    let cof = fm.base_pre().is_cof(f) && fiber_b.is_cof(phi);
    let fib = fm.base_pre().is_fib(f) && {
        let transposed = adj
            .transpose_to_right_at(x, phi)
            .expect("φ has the transposable shape");
        fiber_a.is_fib(transposed)
    };
    IntegralFlags { weq, fib, cof }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::example_4_4_diagram;
    use crate::fincat::chain;
    use crate::grothendieck::integrate_cat;
    use crate::modelstruct::{enumerate_model_structures, MorClass, DEFAULT_SHAPE_BOUND};

    #[test]
    fn example_total_is_three_chain_with_expected_classes() {
        // Base: chain2 with (w: all, c: all, f: ids). Fiber over the top:
        // trivial structure on chain2. The total is a 3-chain.
        let c2 = chain(2);
        let structures = enumerate_model_structures(&c2, DEFAULT_SHAPE_BOUND);
        let trivial = structures
            .iter()
            .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
            .unwrap()
            .clone();
        let fm = example_4_4_diagram(trivial).unwrap();
        let groth = integrate_cat(fm.underlying()).unwrap();
        assert_eq!(groth.total().object_count(), 3);
        // (∅,•)→(*,0): weq ∧ cof ∧ ¬fib.
        let m = find_total_morphism(&groth, "(0,pt)", "(1,0)");
        let flags = classify_integral(&fm, &groth, m);
        assert_eq!((flags.weq, flags.cof, flags.fib), (true, true, false));
        // (∅,•)→(*,1): ¬weq ∧ cof ∧ ¬fib.
        let m = find_total_morphism(&groth, "(0,pt)", "(1,1)");
        let flags = classify_integral(&fm, &groth, m);
        assert_eq!((flags.weq, flags.cof, flags.fib), (false, true, false));
        // (*,0)→(*,1): ¬weq ∧ cof ∧ fib.
        let m = find_total_morphism(&groth, "(1,0)", "(1,1)");
        let flags = classify_integral(&fm, &groth, m);
        assert_eq!((flags.weq, flags.cof, flags.fib), (false, true, true));
        // Identities: everything.
        for o in groth.total().objects() {
            let id = groth.total().identity(o);
            let flags = classify_integral(&fm, &groth, id);
            assert!(flags.weq && flags.cof && flags.fib);
        }
    }

    fn find_total_morphism(
        groth: &GrothCat,
        src: &str,
        tgt: &str,
    ) -> MorId {
        let total = groth.total();
        let s = total.object_by_name(src).unwrap();
        let t = total.object_by_name(tgt).unwrap();
        total.hom(s, t)[0]
    }
}
