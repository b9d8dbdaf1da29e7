//! The worked examples and generators: slice/coslice diagrams, injective and
//! projective arrow structures, the two-object counterexample scenario, and
//! the lattice corpus.

mod arrow;
mod example44;
mod slice;

pub use arrow::{arrow_structures, is_left_proper, is_right_proper, ArrowStructures};
pub use example44::{example_4_4, example_4_4_diagram, ex44_base, Example44Report};
pub use slice::{coslice_functor, slice_functor};

use crate::fincat::{boolean_lattice_2, chain};
use crate::integral::ModCatFunctor;
use crate::modelstruct::{enumerate_model_structures, ModelCat};
use crate::{Error, Result};

/// One named corpus item.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub provenance: String,
    pub payload: CorpusPayload,
}

#[derive(Debug, Clone)]
pub enum CorpusPayload {
    Model(ModelCat),
    Functor(ModCatFunctor),
}

/// Generation bounds. The defaults keep the full suite in interactive time;
/// counts downstream are frozen as regressions.
#[derive(Debug, Clone, Copy)]
pub struct CorpusSpec {
    pub max_chain: usize,
    pub include_b2: bool,
    pub shape_bound: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_chain: 4,
            include_b2: true,
            shape_bound: crate::modelstruct::DEFAULT_SHAPE_BOUND,
        }
    }
}

/// Generate the corpus: every model structure on the bounded lattices, the
/// slice and coslice diagram over each, and the constant diagrams between
/// the small structures. Deterministic naming throughout.
pub fn generate_corpus(spec: CorpusSpec) -> Result<Vec<CorpusEntry>> {
    if spec.max_chain > 5 {
        return Err(Error::Precondition(
            "corpus bound too large: chains are limited to 5 elements".into(),
        ));
    }
    let mut lattices = Vec::new();
    for k in 1..=spec.max_chain {
        lattices.push(chain(k));
    }
    if spec.include_b2 {
        lattices.push(boolean_lattice_2());
    }
    let mut entries = Vec::new();
    let mut structures = Vec::new();
    for lattice in &lattices {
        for mc in enumerate_model_structures(lattice, spec.shape_bound) {
            entries.push(CorpusEntry {
                name: mc.name.clone(),
                provenance: format!("enumerated structure on {}", lattice.name()),
                payload: CorpusPayload::Model(mc.clone()),
            });
            structures.push(mc);
        }
    }
    for mc in &structures {
        let slice = slice_functor(mc)?;
        entries.push(CorpusEntry {
            name: slice.name.clone(),
            provenance: format!("slice diagram over {}", mc.name),
            payload: CorpusPayload::Functor(slice),
        });
        let coslice = coslice_functor(mc)?;
        entries.push(CorpusEntry {
            name: coslice.name.clone(),
            provenance: format!("coslice diagram over {}", mc.name),
            payload: CorpusPayload::Functor(coslice),
        });
    }
    // Constant diagrams between the structures on the point and the 2-chain.
    let small: Vec<&ModelCat> = structures
        .iter()
        .filter(|m| m.base().object_count() <= 2)
        .collect();
    for base in &small {
        for fiber in &small {
            let underlying = crate::grothendieck::AdjCatFunctor::constant(
                format!("const[{}→{}]", base.name, fiber.name),
                base.base().clone(),
                fiber.base().clone(),
            );
            let fm = ModCatFunctor::new(
                format!("const[{} over {}]", fiber.name, base.name),
                underlying,
                (*base).clone(),
                vec![(*fiber).clone(); base.base().object_count()],
            )?;
            entries.push(CorpusEntry {
                name: fm.name.clone(),
                provenance: "constant diagram".into(),
                payload: CorpusPayload::Functor(fm),
            });
        }
    }
    Ok(entries)
}

/// The proper and relative diagrams of the corpus, the population every
/// theorem suite runs over.
pub fn proper_relative_corpus(spec: CorpusSpec) -> Result<Vec<ModCatFunctor>> {
    let mut out = Vec::new();
    for entry in generate_corpus(spec)? {
        if let CorpusPayload::Functor(fm) = entry.payload {
            if crate::integral::check_proper(&fm).is_proper()
                && crate::integral::check_relative(&fm).passed()
            {
                out.push(fm);
            }
        }
    }
    Ok(out)
}
