//! Minimal idempotents of `H_n` indexed by Young diagrams with `n` cells:
//! row symmetrizers on the outside, column antisymmetrizers in the middle,
//! conjugated into place by a braid lift of the row/column shuffle. The
//! normalization scalar is recovered by squaring.

use crate::elem::{HeckeElem, HeckeError};
use crate::perm::Perm;
use crate::symmetrizer::{symmetrizer, SymKind};
use cq_exact::FieldElem;
use cq_young::YoungDiagram;

#[derive(Clone, Debug)]
pub struct YoungIdem {
    pub lambda: YoungDiagram,
    /// The normalized idempotent `y_lambda`.
    pub element: HeckeElem,
    /// The squaring scalar `m_lambda` of the unnormalized product.
    pub norm: FieldElem,
}

/// Product of row symmetrizers, each embedded on the contiguous strand
/// interval of its row (strands in row-reading order).
fn row_block(lambda: &YoungDiagram, n: usize) -> Result<HeckeElem, HeckeError> {
    let mut acc = HeckeElem::one(n);
    let mut offset = 0usize;
    for &len in lambda.rows() {
        if len >= 2 {
            let f = symmetrizer(len, len as usize, SymKind::Sym)?
                .tensor_left(offset)
                .tensor_right(n - offset - len as usize);
            acc = acc.mul(&f)?;
        }
        offset += len as usize;
    }
    Ok(acc)
}

/// Product of column antisymmetrizers on contiguous intervals in
/// column-reading order, conjugated by the braid lift of the permutation
/// that shuffles column-reading positions into row-reading positions.
fn column_block(lambda: &YoungDiagram, n: usize) -> Result<HeckeElem, HeckeError> {
    let tr = lambda.transpose();
    let mut inner = HeckeElem::one(n);
    let mut offset = 0usize;
    for &len in tr.rows() {
        if len >= 2 {
            let g = symmetrizer(len, len as usize, SymKind::Antisym)?
                .tensor_left(offset)
                .tensor_right(n - offset - len as usize);
            inner = inner.mul(&g)?;
        }
        offset += len as usize;
    }

    // Position of cell (i, j) in row-reading order (0-indexed).
    let row_pos = |i: u32, j: u32| -> usize {
        let before: u32 = lambda.rows().iter().take(i as usize - 1).sum();
        (before + j - 1) as usize
    };
    // shuffle: column-reading position -> row-reading position
    let mut images = vec![0u8; n];
    let mut col_pos = 0usize;
    for j in 1..=tr.num_rows() {
        for i in 1..=tr.row(j) {
            images[col_pos] = row_pos(i, j) as u8;
            col_pos += 1;
        }
    }
    let shuffle = Perm::from_images(images);

    // Positive braid lift of the shuffle and its honest inverse.
    let mut u = HeckeElem::one(n);
    for i in shuffle.reduced_word() {
        u = u.right_mul_sigma(i + 1)?;
    }
    let mut u_inv = HeckeElem::one(n);
    for i in shuffle.reduced_word().into_iter().rev() {
        u_inv = u_inv.right_mul_sigma_inv(i + 1)?;
    }
    u.mul(&inner)?.mul(&u_inv)
}

/// Build the normalized minimal idempotent for `lambda`. Results are cached
/// per diagram; the construction is referentially transparent.
pub fn young_idempotent(lambda: &YoungDiagram) -> Result<YoungIdem, HeckeError> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<YoungDiagram, YoungIdem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let built = young_idempotent_uncached(lambda)?;
    cache
        .lock()
        .unwrap()
        .insert(lambda.clone(), built.clone());
    Ok(built)
}

fn young_idempotent_uncached(lambda: &YoungDiagram) -> Result<YoungIdem, HeckeError> {
    let n = lambda.size() as usize;
    assert!(n >= 1, "empty diagram has no idempotent");
    let f = row_block(lambda, n)?;
    let g = column_block(lambda, n)?;
    let dotted = f.mul(&g)?.mul(&f)?;
    let squared = dotted.mul(&dotted)?;
    // dotted^2 = m * dotted; read m off any nonzero coefficient.
    let (w, c) = dotted
        .terms()
        .next()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or(HeckeError::DegenerateNormalization)?;
    let m = &squared.coeff(&w) / &c;
    if m.is_zero() {
        return Err(HeckeError::DegenerateNormalization);
    }
    debug_assert_eq!(squared, dotted.scale(&m));
    let element = dotted.scale(&m.inv().unwrap());
    Ok(YoungIdem {
        lambda: lambda.clone(),
        element,
        norm: m,
    })
}
