//! Closed formulas for the genus and crosscap number of complete and
//! complete bipartite graphs.

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ClosedForm {
    /// Orientable genus of `K_n`.
    CompleteGenus(usize),
    /// Orientable genus of `K_{m,n}`.
    BipartiteGenus(usize, usize),
    /// Nonorientable genus of `K_n`.
    CompleteCrosscap(usize),
    /// Nonorientable genus of `K_{m,n}`.
    BipartiteCrosscap(usize, usize),
}

pub fn closed_form_genus(kind: ClosedForm) -> Result<usize> {
    let out_of_range = || Err(Error::InvalidConfig(alloc::format!("{kind:?} is outside the range of the formula")));
    match kind {
        ClosedForm::CompleteGenus(n) => {
            if n < 3 {
                return out_of_range();
            }
            Ok(((n - 3) * (n.max(4) - 4)).div_ceil(12))
        }
        ClosedForm::CompleteCrosscap(n) => {
            if n < 3 {
                return out_of_range();
            }
            if n == 7 {
                return Ok(3);
            }
            Ok(((n - 3) * (n.max(4) - 4)).div_ceil(6))
        }
        ClosedForm::BipartiteGenus(m, n) => {
            if m < 2 || n < 2 {
                return out_of_range();
            }
            Ok(((m - 2) * (n - 2)).div_ceil(4))
        }
        ClosedForm::BipartiteCrosscap(m, n) => {
            if m < 2 || n < 2 {
                return out_of_range();
            }
            Ok(((m - 2) * (n - 2)).div_ceil(2))
        }
    }
}
