//! Good subsemigroups of ℕ^d, stored on a finite box.
//!
//! A semigroup is kept as a corner vector `C` and a bitmap over the box
//! `[0, C]`; membership of an arbitrary vector `α` is read at `min(α, C)`.
//! Construction shrinks the corner to the conductor `δ` whenever that keeps
//! the same set, which is always the case for good semigroups.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::numerical::NumericalSemigroup;

/// Points of a box `[0, C] ⊂ ℕ^d` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BoxShape {
    corner: Vec<u64>,
    strides: Vec<usize>,
    len: usize,
}

impl BoxShape {
    pub(crate) fn new(corner: &[u64]) -> Self {
        let mut strides = vec![0; corner.len()];
        let mut len = 1usize;
        for j in (0..corner.len()).rev() {
            strides[j] = len;
            len *= corner[j] as usize + 1;
        }
        BoxShape {
            corner: corner.to_vec(),
            strides,
            len,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn corner(&self) -> &[u64] {
        &self.corner
    }

    /// Index of `min(α, C)`.
    pub(crate) fn index_capped(&self, alpha: &[u64]) -> usize {
        alpha
            .iter()
            .zip(&self.corner)
            .zip(&self.strides)
            .map(|((&a, &c), &s)| a.min(c) as usize * s)
            .sum()
    }

    pub(crate) fn point(&self, mut index: usize) -> Vec<u64> {
        self.strides
            .iter()
            .map(|&s| {
                let x = index / s;
                index %= s;
                x as u64
            })
            .collect()
    }

    pub(crate) fn points(&self) -> Vec<Vec<u64>> {
        (0..self.len).map(|i| self.point(i)).collect()
    }
}

/// The first violated axiom found by [`GoodSemigroup::check_good`], in
/// lexicographic order of the offending vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodViolation {
    /// `a + b` is not a member.
    NotClosed { a: Vec<u64>, b: Vec<u64> },
    /// `min(a, b)` is not a member.
    MinNotMember { a: Vec<u64>, b: Vec<u64> },
    /// `a` and `b` agree in coordinate `j` but no lifting element exists.
    NoLift { a: Vec<u64>, b: Vec<u64>, j: usize },
}

impl fmt::Display for GoodViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodViolation::NotClosed { a, b } => {
                write!(f, "property (0): {a:?} + {b:?} is not a member")
            }
            GoodViolation::MinNotMember { a, b } => {
                write!(f, "property (1): min({a:?}, {b:?}) is not a member")
            }
            GoodViolation::NoLift { a, b, j } => write!(
                f,
                "property (2): {a:?} and {b:?} agree at coordinate {} but no lifting element exists",
                j + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoodSemigroup {
    d: usize,
    conductor: Vec<u64>,
    shape: BoxShape,
    bits: Vec<bool>,
}

fn check_dim(d: usize, alpha: &[u64]) -> Result<()> {
    if alpha.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: alpha.len(),
        });
    }
    Ok(())
}

fn leq(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn vmin(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect()
}

impl GoodSemigroup {
    /// Builds a semigroup from a predicate satisfying
    /// `member(α) = member(min(α, corner))` for every `α`.
    pub fn from_membership<F>(d: usize, corner: &[u64], member: F, exec: Execution) -> Result<Self>
    where
        F: Fn(&[u64]) -> bool + Sync + Send,
    {
        check_dim(d, corner)?;
        if d == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        let shape = BoxShape::new(corner);
        let points = shape.points();
        let bits = exec.map(&points, |p| member(p));
        Self::normalize(d, shape, bits)
    }

    fn normalize(d: usize, shape: BoxShape, bits: Vec<bool>) -> Result<Self> {
        if !bits[0] {
            return Err(Error::NotGood("0 is not a member".into()));
        }
        if !bits[shape.len() - 1] {
            return Err(Error::NotGood(format!(
                "corner {:?} is not a member, no conductor in the box",
                shape.corner()
            )));
        }
        // upper[i]: point(i) + ℕ^d lies in the set
        let corner = shape.corner().to_vec();
        let mut upper = vec![false; shape.len()];
        for i in (0..shape.len()).rev() {
            if !bits[i] {
                continue;
            }
            let p = shape.point(i);
            upper[i] = (0..d).all(|j| p[j] == corner[j] || upper[i + shape.strides[j]]);
        }
        let mut delta = corner.clone();
        for (i, &u) in upper.iter().enumerate() {
            if u {
                delta = vmin(&delta, &shape.point(i));
            }
        }
        let candidate = GoodSemigroup {
            d,
            conductor: corner.clone(),
            shape,
            bits,
        };
        if !upper[candidate.shape.index_capped(&delta)] {
            return Ok(candidate);
        }
        let small = BoxShape::new(&delta);
        let small_bits: Vec<bool> = (0..small.len())
            .map(|i| candidate.member(&small.point(i)))
            .collect();
        let shrunk = GoodSemigroup {
            d,
            conductor: delta,
            shape: small,
            bits: small_bits,
        };
        let same = (0..candidate.shape.len()).all(|i| {
            let p = candidate.shape.point(i);
            candidate.bits[i] == shrunk.member(&p)
        });
        Ok(if same { shrunk } else { candidate })
    }

    /// Semigroup given by its conductor and the members in `[0, conductor]`.
    pub fn from_literal(d: usize, conductor: &[u64], small_elements: &[Vec<u64>]) -> Result<Self> {
        check_dim(d, conductor)?;
        let shape = BoxShape::new(conductor);
        let mut bits = vec![false; shape.len()];
        for e in small_elements {
            check_dim(d, e)?;
            if !leq(e, conductor) {
                return Err(Error::Format(format!(
                    "small element {e:?} lies outside the conductor box {conductor:?}"
                )));
            }
            bits[shape.index_capped(e)] = true;
        }
        Self::normalize(d, shape, bits)
    }

    pub fn naturals(d: usize) -> Self {
        let zero = vec![0; d];
        GoodSemigroup {
            d,
            conductor: zero.clone(),
            shape: BoxShape::new(&zero),
            bits: vec![true],
        }
    }

    /// One-dimensional good semigroup of a numerical semigroup.
    pub fn from_numerical(s: &NumericalSemigroup) -> Self {
        let c = s.conductor();
        Self::from_membership(1, &[c], |a| s.contains(a[0]), Execution::Sequential)
            .expect("numerical semigroups are good")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Componentwise smallest `δ` with `δ + ℕ^d ⊆ S`.
    ///
    /// For candidates that are not good the stored box may be larger than
    /// the conductor; [`corner`](Self::corner) returns the stored box.
    pub fn conductor(&self) -> &[u64] {
        &self.conductor
    }

    pub fn corner(&self) -> &[u64] {
        self.shape.corner()
    }

    pub(crate) fn member(&self, alpha: &[u64]) -> bool {
        self.bits[self.shape.index_capped(alpha)]
    }

    pub fn contains(&self, alpha: &[u64]) -> Result<bool> {
        check_dim(self.d, alpha)?;
        Ok(self.member(alpha))
    }

    /// Members inside the stored box, in lexicographic order.
    pub fn small_elements(&self) -> Vec<Vec<u64>> {
        (0..self.shape.len())
            .filter(|&i| self.bits[i])
            .map(|i| self.shape.point(i))
            .collect()
    }

    fn members_in(&self, corner: &[u64]) -> Vec<Vec<u64>> {
        BoxShape::new(corner)
            .points()
            .into_iter()
            .filter(|p| self.member(p))
            .collect()
    }

    pub fn check_good(&self) -> std::result::Result<(), GoodViolation> {
        self.check_good_with(Execution::default())
    }

    /// Checks closure under addition, property (1) (min), and property (2)
    /// (lifting) on the stored box; property (3) holds by construction.
    pub fn check_good_with(&self, exec: Execution) -> std::result::Result<(), GoodViolation> {
        let members = self.small_elements();
        let corner = self.corner().to_vec();
        let found = exec.find_first(&members, |a| {
            for b in &members {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if !self.member(&sum) {
                    return Some(GoodViolation::NotClosed { a: a.clone(), b: b.clone() });
                }
                if !self.member(&vmin(a, b)) {
                    return Some(GoodViolation::MinNotMember { a: a.clone(), b: b.clone() });
                }
                for j in 0..self.d {
                    if a[j] != b[j] || a[j] >= corner[j] {
                        continue;
                    }
                    // a coordinate sitting on the corner stands for every
                    // larger value, so such a pair may differ there
                    let capped = (0..self.d).any(|i| i != j && a[i] == corner[i]);
                    if a == b && !capped {
                        continue;
                    }
                    if !self.has_lift(a, b, j, &members) {
                        return Some(GoodViolation::NoLift { a: a.clone(), b: b.clone(), j });
                    }
                }
            }
            None
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    fn has_lift(&self, a: &[u64], b: &[u64], j: usize, members: &[Vec<u64>]) -> bool {
        members.iter().any(|e| {
            e[j] > a[j]
                && (0..self.d).all(|i| {
                    let m = a[i].min(b[i]);
                    if i == j {
                        true
                    } else if a[i] != b[i] {
                        e[i] == m
                    } else {
                        e[i] >= m
                    }
                })
        })
    }

    pub fn is_good(&self) -> bool {
        self.check_good().is_ok()
    }

    /// `0` is the only member with a zero coordinate.
    pub fn is_local(&self) -> bool {
        let scan: Vec<u64> = self.corner().iter().map(|c| c + 1).collect();
        self.members_in(&scan)
            .iter()
            .all(|p| p.iter().all(|&x| x == 0) || p.iter().all(|&x| x > 0))
    }

    /// Minimal nonzero member.
    pub fn fine_multiplicity(&self) -> Result<Vec<u64>> {
        if !self.is_local() {
            return Err(Error::NotLocal);
        }
        let scan: Vec<u64> = self.corner().iter().map(|c| c + 1).collect();
        let m = self
            .members_in(&scan)
            .into_iter()
            .filter(|p| p.iter().any(|&x| x > 0))
            .reduce(|a, b| vmin(&a, &b))
            .expect("corner + 1 is a nonzero member");
        Ok(m)
    }

    pub fn total_multiplicity(&self) -> Result<u64> {
        Ok(self.fine_multiplicity()?.iter().sum())
    }

    /// `S(α) − α = {β − α : β ∈ S, β ≥ α}`.
    pub fn residue(&self, alpha: &[u64]) -> Result<GoodSemigroup> {
        if !self.contains(alpha)? {
            return Err(Error::NotMember(format!("{alpha:?}")));
        }
        let corner: Vec<u64> = self
            .corner()
            .iter()
            .zip(alpha)
            .map(|(c, a)| c.saturating_sub(*a))
            .collect();
        GoodSemigroup::from_membership(
            self.d,
            &corner,
            |b| {
                let sum: Vec<u64> = b.iter().zip(alpha).map(|(x, y)| x + y).collect();
                self.member(&sum)
            },
            Execution::Sequential,
        )
    }

    pub fn is_arf_good(&self) -> bool {
        self.is_arf_good_with(Execution::default())
    }

    /// Every residue `S(α) − α` is closed under addition.
    pub fn is_arf_good_with(&self, exec: Execution) -> bool {
        let members = self.small_elements();
        exec.all(&members, |a| {
            let above: Vec<&Vec<u64>> = members.iter().filter(|b| leq(a, b)).collect();
            above.iter().enumerate().all(|(i, b1)| {
                above[i..].iter().all(|b2| {
                    let v: Vec<u64> = (0..self.d).map(|k| b1[k] + b2[k] - a[k]).collect();
                    self.member(&v)
                })
            })
        })
    }

    /// Projection on coordinate `j` (0-based).
    pub fn projection(&self, j: usize) -> Result<NumericalSemigroup> {
        if j >= self.d {
            return Err(Error::IndexOutOfRange { index: j, d: self.d });
        }
        let c = self.corner()[j];
        let mut seen = vec![false; c as usize + 1];
        for p in self.small_elements() {
            seen[p[j] as usize] = true;
        }
        Ok(NumericalSemigroup::from_membership(c, |n| n >= c || seen[n as usize]))
    }

    /// Projection on the coordinates listed in `coords` (0-based, in that order).
    pub fn project(&self, coords: &[usize]) -> Result<GoodSemigroup> {
        if let Some(&j) = coords.iter().find(|&&j| j >= self.d) {
            return Err(Error::IndexOutOfRange { index: j, d: self.d });
        }
        let corner: Vec<u64> = coords.iter().map(|&j| self.corner()[j]).collect();
        let shape = BoxShape::new(&corner);
        let mut bits = vec![false; shape.len()];
        for p in self.small_elements() {
            let q: Vec<u64> = coords.iter().map(|&j| p[j]).collect();
            bits[shape.index_capped(&q)] = true;
        }
        Self::normalize(coords.len(), shape, bits)
    }

    pub fn intersection(&self, other: &GoodSemigroup) -> Result<GoodSemigroup> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: other.d });
        }
        let corner: Vec<u64> = self
            .corner()
            .iter()
            .zip(other.corner())
            .map(|(a, b)| *a.max(b))
            .collect();
        GoodSemigroup::from_membership(
            self.d,
            &corner,
            |a| self.member(a) && other.member(a),
            Execution::default(),
        )
    }

    pub fn is_subset_of(&self, other: &GoodSemigroup) -> bool {
        if self.d != other.d {
            return false;
        }
        let corner: Vec<u64> = self
            .corner()
            .iter()
            .zip(other.corner())
            .map(|(a, b)| *a.max(b))
            .collect();
        BoxShape::new(&corner)
            .points()
            .iter()
            .all(|p| !self.member(p) || other.member(p))
    }

    /// The smallest member whose `j`-th coordinate equals `c`.
    pub fn minimal_member_with(&self, j: usize, c: u64) -> Result<Vec<u64>> {
        if j >= self.d {
            return Err(Error::IndexOutOfRange { index: j, d: self.d });
        }
        let cj = self.corner()[j];
        let m = self
            .small_elements()
            .into_iter()
            .filter(|p| p[j] == c.min(cj))
            .reduce(|a, b| vmin(&a, &b))
            .map(|mut v| {
                v[j] = c;
                v
            });
        match m {
            Some(v) if self.member(&v) => Ok(v),
            _ => Err(Error::NotMember(format!("no member with coordinate {} equal to {c}", j + 1))),
        }
    }
}

impl fmt::Display for GoodSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_v = |v: &[u64]| {
            let parts: Vec<String> = v.iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        };
        let small: Vec<String> = self.small_elements().iter().map(|v| fmt_v(v)).collect();
        write!(f, "{{{}}} ∪ ({} + ℕ^{})", small.join(","), fmt_v(self.corner()), self.d)
    }
}
