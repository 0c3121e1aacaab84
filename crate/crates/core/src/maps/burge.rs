use serde::{Deserialize, Serialize};

use super::Perm;
use crate::error::{Error, Result};
use crate::seqcore::{has_flat_step, is_modasc, Word};

/// How columns with equal top entries are ordered after the flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieBreak {
    /// Decreasing bottom entries; gives the Fishburn permutation of a
    /// modified ascent sequence.
    Descending,
    /// Increasing bottom entries; a bijection from primitive sequences onto
    /// the omega class.
    Ascending,
}

/// Burge transpose of the biword with top row `1 2 ... n` and bottom row `x`.
///
/// Columns `(i, x_i)` are flipped to `(x_i, i)` and stably sorted by top
/// entry, ties broken per `tie`; the bottom row of the result is returned.
pub fn burge_fishburn(x: &Word, tie: TieBreak) -> Result<Perm> {
    if !is_modasc(x) {
        return Err(Error::NotInClass {
            object: x.to_string(),
            class: "Modasc".into(),
        });
    }
    if tie == TieBreak::Ascending && has_flat_step(x) {
        return Err(Error::NotInClass {
            object: x.to_string(),
            class: "Prim".into(),
        });
    }
    let mut columns: Vec<(u32, u32)> = x
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    columns.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| match tie {
            TieBreak::Descending => b.1.cmp(&a.1),
            TieBreak::Ascending => a.1.cmp(&b.1),
        })
    });
    let bottom = columns.into_iter().map(|(_, i)| i).collect();
    Ok(Perm::from_word_unchecked(Word::from_vec_unchecked(bottom)))
}
