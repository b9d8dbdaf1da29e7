//! The theorem verification suites behind `verify-theorem`.

use crate::report::Report;
use fcat_core::adjunction::Adjunction;
use fcat_core::corpus::{
    arrow_structures, example_4_4, slice_functor, CorpusSpec,
};
use fcat_core::fincat::{chain, point};
use fcat_core::grothendieck::AdjCatFunctor;
use fcat_core::integral::{
    base_change, build_integral, fubini, product_model, verify_trivial_characterization,
    verify_weq_symmetry, BaseChangeCert, BaseChangeFamily, BuildMode, IntegralStructure,
    ModCatFunctor, MorphismKind,
};
use fcat_core::modelfib::{
    check_cartesian_lemmas, check_pi_wfs, check_projection_quillen, check_relative_model,
    compare_diagram_with_straightening, compare_rebuilt_with_original, straighten_integral,
    FibrationCandidate, WfsPair,
};
use fcat_core::modelstruct::{
    enumerate_model_structures, ModelCat, MorClass, PreModel,
};
use fcat_core::Result;

pub fn corpus_for(bound: usize) -> CorpusSpec {
    CorpusSpec {
        shape_bound: bound,
        ..CorpusSpec::default()
    }
}

fn chain2_structure(weq: &str, cof: &str, fib: &str, bound: usize) -> ModelCat {
    enumerate_model_structures(&chain(2), bound)
        .into_iter()
        .find(|m| {
            m.structure().describe_class(MorClass::Weq) == weq
                && m.structure().describe_class(MorClass::Cof) == cof
                && m.structure().describe_class(MorClass::Fib) == fib
        })
        .expect("structure exists on the 2-chain")
}

/// Build the integral structure for every proper relative corpus diagram
/// (or one named diagram) and verify the axioms plus the two diagnostic
/// characterizations.
pub fn suite_integral(
    diagrams: &[ModCatFunctor],
    bound: usize,
    report: &mut Report,
) -> Result<()> {
    for fm in diagrams {
        match build_integral(fm, BuildMode::RequireProperRelative, bound) {
            Ok(istruct) => {
                report.push_pass(
                    format!("integral[{}]", fm.name),
                    "integral-model-structure",
                );
                let characterization = verify_trivial_characterization(fm, &istruct);
                report.push_outcome(
                    format!("characterization[{}]", fm.name),
                    "trivial-class-characterization",
                    characterization.passed(),
                    characterization
                        .first()
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                );
                let symmetry = verify_weq_symmetry(fm, &istruct);
                report.push_outcome(
                    format!("symmetry[{}]", fm.name),
                    "weq-symmetry",
                    symmetry.passed(),
                    symmetry.first().map(|v| v.to_string()).unwrap_or_default(),
                );
                report.stats.categories += 1;
                report.stats.morphisms += istruct.total().morphism_count();
            }
            Err(e) => {
                report.push_fail(
                    format!("integral[{}]", fm.name),
                    "integral-model-structure",
                    e.to_string(),
                );
            }
        }
    }
    Ok(())
}

fn identity_base_change(
    fm: &ModCatFunctor,
    istruct: &IntegralStructure,
) -> Result<BaseChangeCert> {
    let base = fm.base().clone();
    let bc = Adjunction::identity(base.clone());
    let family = BaseChangeFamily {
        kind: MorphismKind::Left,
        components: base
            .objects()
            .map(|a| Adjunction::identity(fm.underlying().fiber(a).clone()))
            .collect(),
    };
    base_change(fm, istruct, fm, istruct, &bc, &family)
}

/// Base-change invariance: left Quillen equivalence families must induce
/// Quillen equivalences of totals, and breaking one family component flips
/// the certificate.
pub fn suite_invariance(bound: usize, report: &mut Report) -> Result<()> {
    let ex44 = chain2_structure("all", "all", "ids", bound);
    // Setups 1 and 2: both restrictions in the two-object scenario with a
    // relative fiber.
    let scenario = example_4_4(ex44.clone(), bound)?;
    for (label, cert) in [
        ("collapse-to-top", &scenario.top_restriction),
        ("include-bottom", &scenario.bottom_inclusion),
    ] {
        report.push_outcome(
            format!("invariance[{label}]"),
            "base-change-quillen-equivalence",
            cert.base_cert.certified_equivalence()
                && cert.family_quillen
                && cert.family_equivalence
                && cert.cert.certified_equivalence(),
            cert.cert.witness.clone().unwrap_or_default(),
        );
    }
    // Identity base changes with identity families on a spread of diagrams.
    let slice_ex44 = slice_functor(&ex44)?;
    let trivial_cof = chain2_structure("ids", "all", "all", bound);
    let slice_triv = slice_functor(&trivial_cof)?;
    let fibrant_all = chain2_structure("all", "ids", "all", bound);
    let coslice_fib = fcat_core::corpus::coslice_functor(&fibrant_all)?;
    let const_ex44 = ModCatFunctor::new(
        "const[ex44 over ex44]",
        AdjCatFunctor::constant("const", ex44.base().clone(), ex44.base().clone()),
        ex44.clone(),
        vec![ex44.clone(); 2],
    )?;
    for fm in [&slice_ex44, &slice_triv, &coslice_fib, &const_ex44] {
        let istruct = build_integral(fm, BuildMode::RequireProperRelative, bound)?;
        let cert = identity_base_change(fm, &istruct)?;
        report.push_outcome(
            format!("invariance[identity on {}]", fm.name),
            "base-change-quillen-equivalence",
            cert.cert.certified_equivalence() && cert.family_equivalence,
            cert.cert.witness.clone().unwrap_or_default(),
        );
        report.stats.categories += 1;
        report.stats.morphisms += istruct.total().morphism_count();
    }
    // Mutation: replace the family by a Quillen adjunction that is not an
    // equivalence; the certificate must flip with a witness.
    let pt = point("pt");
    let trivial = chain2_structure("ids", "all", "all", bound);
    let make_const = |fiber: &ModelCat| -> Result<(ModCatFunctor, IntegralStructure)> {
        let fm = ModCatFunctor::new(
            format!("const[{}]", fiber.name),
            AdjCatFunctor::constant("const", pt.clone(), fiber.base().clone()),
            ModelCat::trivial_point("pt"),
            vec![fiber.clone()],
        )?;
        let istruct = build_integral(&fm, BuildMode::RequireProperRelative, bound)?;
        Ok((fm, istruct))
    };
    let (fm_triv, is_triv) = make_const(&trivial)?;
    let (fm_ex44, is_ex44) = make_const(&ex44)?;
    let bc = Adjunction::identity(pt.clone());
    let family = BaseChangeFamily {
        kind: MorphismKind::Left,
        components: vec![Adjunction::identity(trivial.base().clone())],
    };
    let mutated = base_change(&fm_triv, &is_triv, &fm_ex44, &is_ex44, &bc, &family)?;
    report.push_outcome(
        "invariance[mutated family]",
        "base-change-quillen-equivalence",
        mutated.cert.is_quillen
            && !mutated.cert.certified_equivalence()
            && !mutated.family_equivalence
            && mutated.cert.witness.is_some(),
        "mutated family was certified an equivalence".to_string(),
    );
    Ok(())
}

/// Fubini: one-step and iterated integrals agree on product bases.
pub fn suite_fubini(bound: usize, report: &mut Report) -> Result<()> {
    let ex44 = chain2_structure("all", "all", "ids", bound);
    let trivial = chain2_structure("ids", "all", "all", bound);
    let ex44_c3 = enumerate_model_structures(&chain(3), bound)
        .into_iter()
        .find(|m| {
            m.structure().describe_class(MorClass::Weq) == "all"
                && m.structure().describe_class(MorClass::Fib) == "ids"
        })
        .expect("3-chain has the all/all/ids structure");

    // Instance 1: constant point diagram.
    let prod = product_model(&ex44, &ex44)?;
    let const_pt = ModCatFunctor::new(
        "const[pt]",
        AdjCatFunctor::constant("const", prod.cat.clone(), point("pt")),
        prod.model.clone(),
        vec![ModelCat::trivial_point("pt"); prod.cat.object_count()],
    )?;
    run_fubini("const-pt over ex44×ex44", &const_pt, &prod, bound, report)?;
    // Instance 2: the slice diagram of the product structure.
    let slices = slice_functor(&prod.model)?;
    run_fubini("slice over ex44×ex44", &slices, &prod, bound, report)?;
    // Instance 3: a constant diagram at a nontrivial fiber.
    let prod_triv = product_model(&trivial, &trivial)?;
    let const_triv = ModCatFunctor::new(
        "const[chain2-trivial]",
        AdjCatFunctor::constant("const", prod_triv.cat.clone(), trivial.base().clone()),
        prod_triv.model.clone(),
        vec![
            enumerate_model_structures(&chain(2), bound)
                .into_iter()
                .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
                .expect("trivial structure");
            prod_triv.cat.object_count()
        ],
    )?;
    run_fubini(
        "const-trivial over trivial×trivial",
        &const_triv,
        &prod_triv,
        bound,
        report,
    )?;
    // Instance 4: slices on a mixed product.
    let prod_mixed = product_model(&ex44, &ex44_c3)?;
    let slices_mixed = slice_functor(&prod_mixed.model)?;
    run_fubini(
        "slice over ex44×chain3",
        &slices_mixed,
        &prod_mixed,
        bound,
        report,
    )?;
    Ok(())
}

fn run_fubini(
    label: &str,
    fm: &ModCatFunctor,
    prod: &fcat_core::integral::ProductModel,
    bound: usize,
    report: &mut Report,
) -> Result<()> {
    match fubini(fm, prod, bound) {
        Ok(rep) => {
            report.push_outcome(
                format!("fubini[{label}]"),
                "fubini-isomorphism",
                rep.passed(),
                rep.match_first
                    .first()
                    .or(rep.match_second.first())
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
            );
            report.stats.categories += 3;
            report.stats.morphisms += rep.combined.total().morphism_count()
                + rep.iterated_first.total().morphism_count()
                + rep.iterated_second.total().morphism_count();
        }
        Err(e) => report.push_fail(format!("fubini[{label}]"), "fubini-isomorphism", e.to_string()),
    }
    Ok(())
}

/// The Grothendieck correspondence: straightening the integral projection
/// recovers the diagram, re-integrating recovers the total, the projection
/// is a model fibration with Quillen projection, and the factorization
/// lemmas hold exhaustively.
pub fn suite_correspondence(
    diagrams: &[ModCatFunctor],
    bound: usize,
    report: &mut Report,
) -> Result<()> {
    for fm in diagrams {
        let istruct = match build_integral(fm, BuildMode::RequireProperRelative, bound) {
            Ok(i) => i,
            Err(e) => {
                report.push_fail(
                    format!("correspondence[{}]", fm.name),
                    "model-fibration-correspondence",
                    e.to_string(),
                );
                continue;
            }
        };
        let outcome = (|| -> Result<(bool, String)> {
            let s = straighten_integral(fm, &istruct, bound)?;
            let there = compare_diagram_with_straightening(fm, istruct.groth(), &s);
            let rebuilt = build_integral(&s.diagram, BuildMode::Force, bound)?;
            let back = compare_rebuilt_with_original(&istruct, &s, &rebuilt);
            let fc = FibrationCandidate::new(
                format!("π[{}]", istruct.name),
                istruct.groth().projection().clone(),
                istruct.classes().clone(),
                fm.base_pre().clone(),
            )?;
            let lemmas = check_cartesian_lemmas(&fc);
            let quillen = check_projection_quillen(&fc);
            let ok = there.passed() && back.passed() && lemmas.passed() && quillen.passed();
            let witness = [&there, &back, &lemmas, &quillen]
                .iter()
                .filter_map(|r| r.first())
                .map(|v| v.to_string())
                .next()
                .unwrap_or_default();
            Ok((ok, witness))
        })();
        match outcome {
            Ok((ok, witness)) => {
                report.push_outcome(
                    format!("correspondence[{}]", fm.name),
                    "model-fibration-correspondence",
                    ok,
                    witness,
                );
            }
            Err(e) => report.push_fail(
                format!("correspondence[{}]", fm.name),
                "model-fibration-correspondence",
                e.to_string(),
            ),
        }
        report.stats.categories += 1;
        report.stats.morphisms += istruct.total().morphism_count();
    }
    // Composition of relative systems: an integral projection followed by
    // the collapse to the point is again a relative system.
    let ex44 = chain2_structure("all", "all", "ids", bound);
    let fm = slice_functor(&ex44)?;
    let istruct = build_integral(&fm, BuildMode::RequireProperRelative, bound)?;
    let pt = point("pt");
    let collapse = fcat_core::fincat::FinFunctor::constant(
        fm.base().clone(),
        pt.clone(),
        fcat_core::fincat::ObjId(0),
    );
    let composite = collapse.compose(istruct.groth().projection())?;
    let fc = FibrationCandidate::new(
        "π then collapse",
        composite,
        istruct.classes().clone(),
        PreModel::discrete_all("pt", pt),
    )?;
    let wfs1 = check_pi_wfs(&fc, WfsPair::TrivCofFib);
    let wfs2 = check_pi_wfs(&fc, WfsPair::CofTrivFib);
    let relmodel = check_relative_model(&fc, bound);
    report.push_outcome(
        "correspondence[composite relative system]",
        "relative-system-composition",
        wfs1.passed() && wfs2.passed() && relmodel.passed(),
        [&wfs1, &wfs2, &relmodel]
            .iter()
            .filter_map(|r| r.first())
            .map(|v| v.to_string())
            .next()
            .unwrap_or_default(),
    );
    Ok(())
}

/// The two-object counterexample scenario for a trivial fiber, the
/// everything-weak fiber, and the point.
pub fn suite_example44(bound: usize, report: &mut Report) -> Result<()> {
    let trivial = chain2_structure("ids", "all", "all", bound);
    let ex44 = chain2_structure("all", "all", "ids", bound);
    let cases: [(&str, ModelCat, bool); 3] = [
        ("trivial-chain2-fiber", trivial, false),
        ("ex44-fiber", ex44, true),
        ("point-fiber", ModelCat::trivial_point("pt"), true),
    ];
    for (label, fiber, expect_relative) in cases {
        let scenario = example_4_4(fiber, bound)?;
        report.push_outcome(
            format!("example44[{label}] axioms"),
            "forced-integral-structure",
            scenario.axioms.passed(),
            scenario.axioms.summary(),
        );
        report.push_outcome(
            format!("example44[{label}] relativeness"),
            "relative-diagram",
            scenario.is_relative == expect_relative,
            format!("expected relative={expect_relative}"),
        );
        report.push_outcome(
            format!("example44[{label}] top restriction"),
            "restriction-quillen-equivalence",
            scenario.top_restriction.cert.certified_equivalence(),
            scenario
                .top_restriction
                .cert
                .witness
                .clone()
                .unwrap_or_default(),
        );
        report.push_outcome(
            format!("example44[{label}] bottom inclusion"),
            "inclusion-equivalence-iff-relative",
            scenario.bottom_inclusion.cert.certified_equivalence() == expect_relative,
            scenario
                .bottom_inclusion
                .cert
                .witness
                .clone()
                .unwrap_or_default(),
        );
        report.stats.categories += 1;
        report.stats.morphisms += scenario.integral.total().morphism_count();
    }
    Ok(())
}

/// Slice diagrams: the injective and projective arrow structures match the
/// integrated (co)slice diagrams class for class, and slice diagrams over
/// right-proper structures are proper and relative.
pub fn suite_slice(bound: usize, report: &mut Report) -> Result<()> {
    let ex44 = chain2_structure("all", "all", "ids", bound);
    let arrows = arrow_structures(&ex44, bound)?;
    report.push_outcome(
        "slice[injective arrow structure]",
        "injective-arrow-structure",
        arrows.injective_match.passed(),
        arrows
            .injective_match
            .first()
            .map(|v| v.to_string())
            .unwrap_or_default(),
    );
    report.push_outcome(
        "slice[projective arrow structure]",
        "projective-arrow-structure",
        arrows.projective_match.passed(),
        arrows
            .projective_match
            .first()
            .map(|v| v.to_string())
            .unwrap_or_default(),
    );
    report.stats.categories += 2;
    report.stats.morphisms += arrows.arrow_cat.morphism_count();
    // Properness of the slice diagram holds for every structure; the
    // relative property kicks in exactly on the right proper ones.
    for k in 2..=3 {
        for mc in enumerate_model_structures(&chain(k), bound) {
            let fm = slice_functor(&mc)?;
            let proper = fcat_core::integral::check_proper(&fm);
            report.push_outcome(
                format!("slice[proper {}]", mc.name),
                "slice-diagram-proper",
                proper.is_proper(),
                proper
                    .left_witness
                    .clone()
                    .or(proper.right_witness.clone())
                    .unwrap_or_default(),
            );
            if fcat_core::corpus::is_right_proper(&mc) {
                let relative = fcat_core::integral::check_relative(&fm);
                report.push_outcome(
                    format!("slice[relative {}]", mc.name),
                    "slice-diagram-relative",
                    relative.passed(),
                    relative.first().map(|v| v.to_string()).unwrap_or_default(),
                );
            }
        }
    }
    Ok(())
}
