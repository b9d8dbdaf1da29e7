//! Lifting problems, solved by brute force over the relevant hom-set.

use crate::fincat::{FinCat, MorId};
use crate::{Error, Result};

/// A commutative square `p ∘ top = bottom ∘ i` asking for a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftingSquare {
    pub i: MorId,
    pub p: MorId,
    pub top: MorId,
    pub bottom: MorId,
}

/// Search `Hom(cod i, dom p)` for a diagonal `h` with `h ∘ i = top` and
/// `p ∘ h = bottom`. The square must commute; the first lift in canonical
/// order is returned, `None` if there is none.
pub fn lifting_exists(c: &FinCat, square: LiftingSquare) -> Result<Option<MorId>> {
    let LiftingSquare { i, p, top, bottom } = square;
    if c.source(top) != c.source(i)
        || c.target(top) != c.source(p)
        || c.source(bottom) != c.target(i)
        || c.target(bottom) != c.target(p)
    {
        return Err(Error::Precondition("lifting square shape mismatch".into()));
    }
    let around = c.compose(p, top);
    if around != c.compose(bottom, i) || around.is_none() {
        return Err(Error::Precondition("lifting square does not commute".into()));
    }
    Ok(c.hom(c.target(i), c.source(p))
        .into_iter()
        .find(|&h| c.compose(h, i) == Some(top) && c.compose(p, h) == Some(bottom)))
}

/// All commutative squares from `i` to `p` (pairs of top and bottom edges).
pub fn squares_between(c: &FinCat, i: MorId, p: MorId) -> Vec<(MorId, MorId)> {
    let mut out = Vec::new();
    for top in c.hom(c.source(i), c.source(p)) {
        for bottom in c.hom(c.target(i), c.target(p)) {
            if c.compose(p, top) == c.compose(bottom, i) && c.compose(p, top).is_some() {
                out.push((top, bottom));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::chain;

    #[test]
    fn identity_p_lifts_via_top() {
        let c2 = chain(2);
        let f = c2.morphism_by_name("0->1").unwrap();
        let id1 = c2.identity(c2.object_by_name("1").unwrap());
        // i = f, p = id_1, top = f, bottom = id_1.
        let lift = lifting_exists(
            &c2,
            LiftingSquare {
                i: f,
                p: id1,
                top: f,
                bottom: id1,
            },
        )
        .unwrap();
        assert_eq!(lift, Some(id1));
    }

    #[test]
    fn no_lift_against_itself_in_chain() {
        let c2 = chain(2);
        let f = c2.morphism_by_name("0->1").unwrap();
        let id0 = c2.identity(c2.object_by_name("0").unwrap());
        let id1 = c2.identity(c2.object_by_name("1").unwrap());
        // Square i = p = f, top = id_0, bottom = id_1: no morphism 1 → 0.
        let lift = lifting_exists(
            &c2,
            LiftingSquare {
                i: f,
                p: f,
                top: id0,
                bottom: id1,
            },
        )
        .unwrap();
        assert_eq!(lift, None);
    }

    #[test]
    fn identity_i_lifts_via_bottom() {
        let c2 = chain(2);
        let f = c2.morphism_by_name("0->1").unwrap();
        let id0 = c2.identity(c2.object_by_name("0").unwrap());
        let lift = lifting_exists(
            &c2,
            LiftingSquare {
                i: id0,
                p: f,
                top: id0,
                bottom: f,
            },
        )
        .unwrap();
        assert_eq!(lift, Some(id0));
    }

    #[test]
    fn non_commuting_square_is_an_error() {
        let c2 = chain(2);
        let f = c2.morphism_by_name("0->1").unwrap();
        let id0 = c2.identity(c2.object_by_name("0").unwrap());
        let err = lifting_exists(
            &c2,
            LiftingSquare {
                i: id0,
                p: f,
                top: f,
                bottom: f,
            },
        );
        assert!(err.is_err());
    }
}
