//! Concrete representations.

mod bundle;
mod fermionic;
mod llt;
mod macdonald;
mod specialized;
mod sum;
mod tensor;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use bundle::{extract_bundle, BundleOperator, BundleRep, Label, LadderKind, MatrixBundle};
pub use fermionic::{wedge_shift, FermionicRep};
pub use llt::LltRep;
pub use macdonald::{gram_schmidt_p, macdonald_b, macdonald_phi_psi, qt_inner, MacdonaldRep};
pub use specialized::Specialized;
pub use sum::{DirectSum, Summand};
pub use tensor::{Pair, Tensor, TensorPower, Word};

/// Splits `(a,b,…)` at top-level commas.
pub(crate) fn split_tuple(text: &str) -> Result<Vec<&str>> {
    let text = text.trim();
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected a parenthesized tuple, got `{text}`"),
        })?;
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse {
                pos: i,
                msg: "unbalanced brackets".into(),
            });
        }
    }
    out.push(inner[start..].trim());
    Ok(out)
}
