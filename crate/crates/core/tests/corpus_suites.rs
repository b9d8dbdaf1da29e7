//! Corpus-wide suites: every proper relative diagram must carry the
//! integral structure, satisfy the diagnostic characterizations, and
//! straighten back to itself.

use fcat_core::corpus::{generate_corpus, proper_relative_corpus, CorpusPayload, CorpusSpec};
use fcat_core::integral::{build_integral, verify_trivial_characterization, verify_weq_symmetry, BuildMode};
use fcat_core::modelfib::{compare_diagram_with_straightening, straighten_integral};
use fcat_core::modelstruct::check_model_axioms;

fn small_spec() -> CorpusSpec {
    CorpusSpec {
        max_chain: 3,
        include_b2: false,
        ..CorpusSpec::default()
    }
}

#[test]
fn corpus_counts_are_stable() {
    // Frozen regression values from the enumeration oracle run: the chains
    // carry 1, 3, 10 and 35 structures, B2 carries 23; every structure
    // contributes one slice and one coslice diagram, and the structures on
    // the point and the 2-chain contribute 16 constant diagrams.
    let spec = CorpusSpec::default();
    let entries = generate_corpus(spec).unwrap();
    let models = entries
        .iter()
        .filter(|e| matches!(e.payload, CorpusPayload::Model(_)))
        .count();
    let functors = entries
        .iter()
        .filter(|e| matches!(e.payload, CorpusPayload::Functor(_)))
        .count();
    assert_eq!(models, 72);
    assert_eq!(functors, 2 * 72 + 16);
    let pr = proper_relative_corpus(spec).unwrap();
    assert_eq!(pr.len(), 156);
}

#[test]
fn structure_counts_per_lattice() {
    use fcat_core::fincat::{boolean_lattice_2, chain};
    use fcat_core::modelstruct::{enumerate_model_structures, DEFAULT_SHAPE_BOUND};
    let counts: Vec<usize> = (1..=4)
        .map(|k| enumerate_model_structures(&chain(k), DEFAULT_SHAPE_BOUND).len())
        .collect();
    assert_eq!(counts, vec![1, 3, 10, 35]);
    assert_eq!(
        enumerate_model_structures(&boolean_lattice_2(), DEFAULT_SHAPE_BOUND).len(),
        23
    );
}

#[test]
fn integral_structure_on_small_corpus() {
    let spec = small_spec();
    for fm in proper_relative_corpus(spec).unwrap() {
        let istruct = build_integral(&fm, BuildMode::RequireProperRelative, spec.shape_bound)
            .unwrap_or_else(|e| panic!("{}: {e}", fm.name));
        let axioms = check_model_axioms(
            istruct.classes(),
            istruct.fact_cof_trivfib(),
            istruct.fact_trivcof_fib(),
            spec.shape_bound,
        );
        assert!(axioms.passed(), "{}: {}", fm.name, axioms.summary());
        assert!(verify_trivial_characterization(&fm, &istruct).passed());
        assert!(verify_weq_symmetry(&fm, &istruct).passed());
        let s = straighten_integral(&fm, &istruct, spec.shape_bound).unwrap();
        let roundtrip = compare_diagram_with_straightening(&fm, istruct.groth(), &s);
        assert!(roundtrip.passed(), "{}: {roundtrip}", fm.name);
    }
}
