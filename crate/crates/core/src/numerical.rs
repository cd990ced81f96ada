//! One-branch theory: numerical semigroups, multiplicity sequences of Arf
//! semigroups, restriction numbers and Arf characters.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Multiplicity sequence `e0, e1, ...` of an Arf numerical semigroup.
///
/// Only the prefix before the all-ones tail is stored; the prefix never ends
/// in `1` (a `1` forces every later entry to be `1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicitySequence {
    prefix: Vec<u32>,
}

/// Length `k >= 1` with `seq[i] = seq[i+1] + ... + seq[i+k]`, entries past the
/// slice being `1`.
fn decomposition_at(entries: &[u32], i: usize) -> Option<usize> {
    let target = *entries.get(i).unwrap_or(&1);
    let mut sum = 0u64;
    let mut k = 0usize;
    while sum < target as u64 {
        k += 1;
        sum += *entries.get(i + k).unwrap_or(&1) as u64;
    }
    (sum == target as u64 && k >= 1).then_some(k)
}

impl MultiplicitySequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut prefix = entries;
        while prefix.last() == Some(&1) {
            prefix.pop();
        }
        if let Some(index) = prefix.iter().position(|&e| e == 0) {
            return Err(Error::InvalidSequence { index });
        }
        for i in 0..prefix.len() {
            if decomposition_at(&prefix, i).is_none() {
                return Err(Error::InvalidSequence { index: i });
            }
        }
        Ok(MultiplicitySequence { prefix })
    }

    /// The sequence `1, 1, 1, ...` of `ℕ`.
    pub fn ones() -> Self {
        MultiplicitySequence { prefix: Vec::new() }
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn entry(&self, i: usize) -> u32 {
        *self.prefix.get(i).unwrap_or(&1)
    }

    /// `e0 + ... + e_k`.
    pub fn prefix_sum(&self, k: usize) -> u64 {
        let stored: u64 = self.prefix.iter().take(k + 1).map(|&e| e as u64).sum();
        let tail = (k + 1).saturating_sub(self.prefix.len()) as u64;
        stored + tail
    }

    /// Inverse of [`prefix_sum`](Self::prefix_sum): the index `k` whose prefix sum is `value`.
    pub fn index_of_sum(&self, value: u64) -> Option<usize> {
        let mut sum = 0u64;
        for (k, &e) in self.prefix.iter().enumerate() {
            sum += e as u64;
            if sum == value {
                return Some(k);
            }
            if sum > value {
                return None;
            }
        }
        if value > sum {
            Some(self.prefix.len() + (value - sum) as usize - 1)
        } else {
            None
        }
    }

    /// Drops `e0`; the sequence of the first blowup.
    pub fn tail(&self) -> Self {
        MultiplicitySequence {
            prefix: self.prefix.iter().skip(1).copied().collect(),
        }
    }

    pub fn is_ones(&self) -> bool {
        self.prefix.is_empty()
    }

    fn k_at(&self, i: usize) -> usize {
        decomposition_at(&self.prefix, i).expect("validated sequence")
    }

    fn max_k(&self) -> usize {
        (0..self.prefix.len()).map(|i| self.k_at(i)).max().unwrap_or(1)
    }

    /// Decomposition lengths `k0, ..., kM` with `M = prefix length + max k + 1`.
    pub fn decomposition_lengths(&self) -> Vec<usize> {
        let m = self.prefix.len() + self.max_k() + 1;
        (0..=m).map(|i| self.k_at(i)).collect()
    }

    fn restriction_numbers_upto(&self, last: usize) -> Vec<usize> {
        let ks: Vec<usize> = (0..=last).map(|i| self.k_at(i)).collect();
        (0..=last)
            .map(|j| (0..j).filter(|&i| i + ks[i] >= j).count())
            .collect()
    }

    /// Restriction numbers `r(e_j)` over the same index range as
    /// [`decomposition_lengths`](Self::decomposition_lengths).
    pub fn restriction_numbers(&self) -> Vec<usize> {
        self.restriction_numbers_upto(self.prefix.len() + self.max_k() + 1)
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.prefix {
            write!(f, "{e},")?;
        }
        write!(f, "1,...")
    }
}

/// Cofinite additive submonoid of ℕ: the conductor plus the members below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    conductor: u64,
    small: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn naturals() -> Self {
        NumericalSemigroup {
            conductor: 0,
            small: Vec::new(),
        }
    }

    /// Builds the semigroup from a membership predicate that is reliable on
    /// `[0, bound]` and true on everything above `bound`.
    pub(crate) fn from_membership(bound: u64, member: impl Fn(u64) -> bool) -> Self {
        let mut conductor = bound + 1;
        while conductor > 0 && member(conductor - 1) {
            conductor -= 1;
        }
        let small = (0..conductor).filter(|&n| member(n)).collect();
        NumericalSemigroup { conductor, small }
    }

    /// Semigroup `⟨generators⟩` generated under addition.
    pub fn generated_by(generators: &[u64]) -> Result<Self> {
        let gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(Error::Empty);
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let min = *gens.iter().min().unwrap();
        let mut member = vec![true];
        let mut run = 0u64;
        let mut n = 0u64;
        // Stop after `min` consecutive members: everything above follows.
        while run < min {
            n += 1;
            let m = gens.iter().any(|&g| n >= g && member[(n - g) as usize]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let bound = n;
        Ok(Self::from_membership(bound, |x| {
            x > bound || member[x as usize]
        }))
    }

    /// Semigroup from an explicit literal; the conductor is normalized and
    /// additive closure is verified.
    pub fn from_small_elements(conductor: u64, small_elements: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = small_elements.iter().copied().collect();
        if conductor > 0 && !set.contains(&0) {
            return Err(Error::Domain("0 must be a small element".into()));
        }
        if let Some(&bad) = set.iter().find(|&&x| x >= conductor) {
            return Err(Error::Domain(format!(
                "small element {bad} is not below the conductor {conductor}"
            )));
        }
        let s = Self::from_membership(conductor, |x| x >= conductor || set.contains(&x));
        let members: Vec<u64> = s.small.clone();
        for &a in &members {
            for &b in &members {
                if !s.contains(a + b) {
                    return Err(Error::Domain(format!(
                        "not closed under addition: {a} + {b}"
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Members below the conductor, ascending.
    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.small.binary_search(&n).is_ok()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        self.small
            .iter()
            .copied()
            .find(|&x| x > 0)
            .unwrap_or(if self.conductor == 0 { 1 } else { self.conductor })
    }

    /// Members in `[0, conductor]`, ascending.
    fn members_through_conductor(&self) -> impl Iterator<Item = u64> + '_ {
        self.small.iter().copied().chain(std::iter::once(self.conductor))
    }

    /// `S(s) − s` is closed under addition for every member `s`.
    pub fn is_arf(&self) -> bool {
        let members: Vec<u64> = self.members_through_conductor().collect();
        for (idx, &s) in members.iter().enumerate() {
            let above = &members[idx..];
            for (a, &x) in above.iter().enumerate() {
                for &y in &above[a..] {
                    if !self.contains(x + y - s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Differences of consecutive members.
    pub fn to_sequence(&self) -> Result<MultiplicitySequence> {
        if !self.is_arf() {
            return Err(Error::NotArf);
        }
        let members: Vec<u64> = self.members_through_conductor().collect();
        let diffs = members.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
        MultiplicitySequence::new(diffs)
    }

    /// Arf characters (minimal Arf system of generators).
    pub fn arf_characters(&self) -> Result<CharacterSet1D> {
        Ok(arf_characters_of(&self.to_sequence()?))
    }

    pub fn arfrank(&self) -> Result<usize> {
        Ok(self.arf_characters()?.len())
    }

    /// `S ⊂ S1 ⊂ ... ⊂ Sn = ℕ`, each step removing the multiplicity.
    pub fn blowup_chain(&self) -> Result<Vec<NumericalSemigroup>> {
        let mut seq = self.to_sequence()?;
        let mut chain = vec![seq_to_semigroup(&seq)];
        while !seq.is_ones() {
            seq = seq.tail();
            chain.push(seq_to_semigroup(&seq));
        }
        Ok(chain)
    }

    /// `S = ℕ` is the intersection of a single-element family; used by the
    /// character checks when a proper subset closes to a smaller semigroup.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        let bound = self.conductor.max(other.conductor);
        (0..=bound).all(|n| !self.contains(n) || other.contains(n))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.small {
            write!(f, "{x},")?;
        }
        write!(f, "{},→}}", self.conductor)
    }
}

/// The Arf semigroup `{0, e0, e0+e1, ...}`.
pub fn seq_to_semigroup(seq: &MultiplicitySequence) -> NumericalSemigroup {
    let mut small = vec![];
    let mut sum = 0u64;
    for &e in seq.prefix() {
        small.push(sum);
        sum += e as u64;
    }
    NumericalSemigroup {
        conductor: sum,
        small,
    }
}

pub fn semigroup_to_seq(s: &NumericalSemigroup) -> Result<MultiplicitySequence> {
    s.to_sequence()
}

/// Multiplicity sequence of the smallest Arf semigroup containing `generators`.
///
/// Repeatedly takes the multiplicity `e = min G` and passes to
/// `{g − e : g > e} ∪ {e}`, which is the generator set of the first blowup.
pub fn arf_closure_sequence(generators: &[u64]) -> Result<MultiplicitySequence> {
    let mut g: BTreeSet<u64> = generators.iter().copied().filter(|&x| x > 0).collect();
    if g.is_empty() {
        return Err(Error::Empty);
    }
    let d = g.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if d != 1 {
        return Err(Error::GcdNotOne(d));
    }
    let mut entries = vec![];
    while !g.contains(&1) {
        let e = *g.iter().next().unwrap();
        entries.push(e as u32);
        let mut next: BTreeSet<u64> = g.iter().filter(|&&x| x > e).map(|&x| x - e).collect();
        next.insert(e);
        g = next;
    }
    MultiplicitySequence::new(entries)
}

pub fn arf_closure(generators: &[u64]) -> Result<NumericalSemigroup> {
    Ok(seq_to_semigroup(&arf_closure_sequence(generators)?))
}

/// The sorted set of Arf characters of an Arf semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterSet1D {
    characters: Vec<u64>,
}

impl CharacterSet1D {
    pub fn characters(&self) -> &[u64] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn closure(&self) -> Result<NumericalSemigroup> {
        arf_closure(&self.characters)
    }
}

/// Prefix sums `e0 + ... + ej` at the indices where `r(e_j) < r(e_{j+1})`.
pub fn arf_characters_of(seq: &MultiplicitySequence) -> CharacterSet1D {
    let last = seq.prefix().len() + seq.max_k() + 2;
    let r = seq.restriction_numbers_upto(last);
    let characters = (0..last)
        .filter(|&j| r[j] < r[j + 1])
        .map(|j| seq.prefix_sum(j))
        .collect();
    CharacterSet1D { characters }
}
