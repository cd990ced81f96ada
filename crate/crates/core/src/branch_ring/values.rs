//! Values of the elements of a curve algebra inside a bounded box.
//!
//! With `T_j = bound_j + 1`, a vector `α ≤ bound` is a value exactly when it
//! is the value of an element of the finite dimensional image `W` of the
//! algebra in `∏ k[[t_j]]/(t_j^{T_j})`. `W` is the span of all monomials in
//! the generators, found by closing `{1}` under multiplication. Writing
//! `D(α)` for the dimension of `{w ∈ W : ord_j(w) ≥ α_j for all j}`, `α` is a
//! value iff `D(α) > D(α + e_j)` for every `j`: then each coordinate can be
//! attained separately and a generic combination attains all of them.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::good_semigroup::BoxShape;

type Element = Vec<BigRational>;

struct Layout {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(sizes: Vec<usize>) -> Self {
        let mut offsets = vec![];
        let mut total = 0;
        for &s in &sizes {
            offsets.push(total);
            total += s;
        }
        Layout { sizes, offsets, total }
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = vec![BigRational::zero(); self.total];
        for (&off, &size) in self.offsets.iter().zip(&self.sizes) {
            for i in 0..size {
                let x = &a[off + i];
                if x.is_zero() {
                    continue;
                }
                for k in 0..size - i {
                    let y = &b[off + k];
                    if !y.is_zero() {
                        out[off + i + k] += x * y;
                    }
                }
            }
        }
        out
    }
}

/// Row-echelon basis with distinct pivots over a set of columns.
struct Echelon {
    rows: Vec<(usize, Element)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: vec![] }
    }

    /// Clears `v` at every pivot; rows come in ascending pivot order and
    /// vanish on the columns of `cols` before their pivot.
    fn reduce(&self, v: &mut Element) {
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    /// Adds `v` if independent over `cols`; returns the reduced, normalized row.
    fn insert(&mut self, mut v: Element, cols: &std::ops::Range<usize>) -> Option<Element> {
        self.reduce(&mut v);
        let p = cols.clone().find(|&k| !v[k].is_zero())?;
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v.clone()));
        Some(v)
    }
}

fn to_element(layout: &Layout, g: &[TruncatedSeries]) -> Element {
    let mut e = Vec::with_capacity(layout.total);
    for (s, &size) in g.iter().zip(&layout.sizes) {
        e.extend((0..size).map(|k| s.coeff(k).cloned().unwrap_or_else(BigRational::zero)));
    }
    e
}

/// Basis of the image `W`.
fn saturate(layout: &Layout, gens: &[Element]) -> Vec<Element> {
    let all = 0..layout.total;
    let mut ech = Echelon::new();
    let mut one = vec![BigRational::zero(); layout.total];
    for &off in &layout.offsets {
        one[off] = BigRational::one();
    }
    let mut basis = vec![];
    let mut queue = vec![];
    if let Some(v) = ech.insert(one, &all) {
        queue.push(v);
    }
    while let Some(b) = queue.pop() {
        for g in gens {
            if let Some(v) = ech.insert(layout.mul(&b, g), &all) {
                queue.push(v);
            }
        }
        basis.push(b);
    }
    basis
}

/// Writes `D(α)` for `α` with first coordinates fixed by `prefix`.
fn dims(layout: &Layout, rows: &[Element], j: usize, prefix: &mut Vec<u64>, shape: &BoxShape, out: &mut [usize]) {
    let cols = layout.offsets[j]..layout.offsets[j] + layout.sizes[j];
    let mut ech = Echelon::new();
    let mut free = vec![];
    for r in rows {
        if ech.insert(r.clone(), &cols).is_none() {
            let mut v = r.clone();
            ech.reduce(&mut v);
            free.push(v);
        }
    }
    let pivots: Vec<usize> = ech.rows.iter().map(|(p, _)| p - cols.start).collect();
    for a in 0..=layout.sizes[j] {
        let keep: Vec<Element> = ech
            .rows
            .iter()
            .zip(&pivots)
            .filter(|(_, &p)| p >= a)
            .map(|((_, r), _)| r.clone())
            .chain(free.iter().cloned())
            .collect();
        prefix.push(a as u64);
        if j + 1 == layout.sizes.len() {
            out[shape.index_capped(prefix)] = keep.len();
        } else {
            dims(layout, &keep, j + 1, prefix, shape, out);
        }
        prefix.pop();
    }
}

fn vec_with_first(a: u64, d: usize) -> Vec<u64> {
    let mut v = vec![0; d];
    v[0] = a;
    v
}

/// Values `α ≤ bound` of elements of the algebra generated by `gens`, in
/// lexicographic order. Elements with a component vanishing to order
/// `> bound_j` are never reported.
pub(crate) fn value_vectors(gens: &[Vec<TruncatedSeries>], bound: &[u64], exec: Execution) -> Result<Vec<Vec<u64>>> {
    let sizes: Vec<usize> = bound.iter().map(|&b| b as usize + 1).collect();
    for g in gens {
        for (j, s) in g.iter().enumerate() {
            if s.precision() < sizes[j] {
                return Err(Error::Truncation(format!(
                    "a generator is known to order {} on branch {} but the bound needs {}",
                    s.precision(),
                    j + 1,
                    sizes[j]
                )));
            }
        }
    }
    let layout = Layout::new(sizes.clone());
    let elems: Vec<Element> = gens.iter().map(|g| to_element(&layout, g)).collect();
    let basis = saturate(&layout, &elems);

    let corner: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
    let shape = BoxShape::new(&corner);
    let mut table = vec![0usize; shape.len()];
    // split the first coordinate across workers
    let first_cols = 0..layout.sizes[0];
    let mut ech = Echelon::new();
    let mut free = vec![];
    for r in &basis {
        if ech.insert(r.clone(), &first_cols).is_none() {
            let mut v = r.clone();
            ech.reduce(&mut v);
            free.push(v);
        }
    }
    let thresholds: Vec<usize> = (0..=layout.sizes[0]).collect();
    let parts = exec.map(&thresholds, |&a| {
        let keep: Vec<Element> = ech
            .rows
            .iter()
            .filter(|(p, _)| *p >= a)
            .map(|(_, r)| r.clone())
            .chain(free.iter().cloned())
            .collect();
        let mut local = vec![0usize; shape.len()];
        if layout.sizes.len() == 1 {
            local[shape.index_capped(&[a as u64])] = keep.len();
        } else {
            let mut prefix = vec![a as u64];
            dims(&layout, &keep, 1, &mut prefix, &shape, &mut local);
        }
        (a, local)
    });
    // each part only fills the slice with first coordinate `a`
    for (a, local) in parts {
        let start = shape.index_capped(&vec_with_first(a as u64, corner.len()));
        let width = shape.len() / (corner[0] as usize + 1);
        table[start..start + width].copy_from_slice(&local[start..start + width]);
    }

    let values = BoxShape::new(bound)
        .points()
        .into_iter()
        .filter(|alpha| {
            let here = table[shape.index_capped(alpha)];
            (0..alpha.len()).all(|j| {
                let mut next = alpha.clone();
                next[j] += 1;
                here > table[shape.index_capped(&next)]
            })
        })
        .collect();
    Ok(values)
}
