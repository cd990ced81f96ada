//! Finite sets of character vectors determining a multi-branch Arf semigroup.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::good_semigroup::GoodSemigroup;
use crate::mult_tree::{max_valid_split, MultiplicityTree};
use crate::numerical::{arf_closure_sequence, MultiplicitySequence};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterVectorSet {
    d: usize,
    vectors: BTreeSet<Vec<u64>>,
}

impl CharacterVectorSet {
    pub fn new(d: usize, vectors: impl IntoIterator<Item = Vec<u64>>) -> Result<Self> {
        let vectors: BTreeSet<Vec<u64>> = vectors.into_iter().collect();
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
        Ok(CharacterVectorSet { d, vectors })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Vectors in lexicographic order.
    pub fn vectors(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.vectors.iter()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.vectors.contains(v)
    }

    fn without(&self, v: &[u64]) -> Self {
        let mut vectors = self.vectors.clone();
        vectors.remove(v);
        CharacterVectorSet { d: self.d, vectors }
    }

    fn subset(&self, mask: u64) -> Self {
        let vectors = self
            .vectors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        CharacterVectorSet { d: self.d, vectors }
    }
}

/// A tree node chosen as the witness above a branching node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WitnessNode {
    pub level: usize,
    /// 0-based branch through the node.
    pub branch: usize,
}

/// Vector of the rooted path ending at `node`.
pub fn path_vector(tree: &MultiplicityTree, node: WitnessNode) -> Result<Vec<u64>> {
    let d = tree.d();
    if node.branch >= d {
        return Err(Error::IndexOutOfRange { index: node.branch, d });
    }
    (0..d)
        .map(|h| {
            let top = if h == node.branch {
                node.level
            } else {
                node.level.min(tree.split_level(node.branch, h)?)
            };
            Ok(tree.branches()[h].prefix_sum(top))
        })
        .collect()
}

/// Minimal members carrying the branch characters, plus one vector above
/// every branching node not already witnessed.
pub fn build_character_vectors(s: &GoodSemigroup) -> Result<CharacterVectorSet> {
    build_character_vectors_with(s, &[])
}

/// As [`build_character_vectors`]; a missing witness for the pair `(j, j+1)`
/// is taken from `preferred` when one of its nodes lies above that
/// branching node on branch `j` or `j+1`, otherwise it is the node one level
/// above the branching node on branch `j+1`.
pub fn build_character_vectors_with(
    s: &GoodSemigroup,
    preferred: &[WitnessNode],
) -> Result<CharacterVectorSet> {
    let tree = MultiplicityTree::from_semigroup(s)?;
    let d = s.d();
    let mut vectors = BTreeSet::new();
    for j in 0..d {
        for &c in s.projection(j)?.arf_characters()?.characters() {
            vectors.insert(s.minimal_member_with(j, c)?);
        }
    }
    for j in 0..d.saturating_sub(1) {
        let sj = tree.splits()[j];
        let witnessed = vectors.iter().any(|v| {
            let (a, b) = split_indices(&tree, v, j);
            a != b
        });
        if witnessed {
            continue;
        }
        let node = preferred
            .iter()
            .copied()
            .find(|w| w.level > sj && (w.branch == j || w.branch == j + 1))
            .unwrap_or(WitnessNode {
                level: sj + 1,
                branch: j + 1,
            });
        vectors.insert(path_vector(&tree, node)?);
    }
    CharacterVectorSet::new(d, vectors)
}

fn split_indices(tree: &MultiplicityTree, v: &[u64], j: usize) -> (Option<usize>, Option<usize>) {
    (
        tree.branches()[j].index_of_sum(v[j]),
        tree.branches()[j + 1].index_of_sum(v[j + 1]),
    )
}

/// Per-branch Arf closures of the coordinates and the level indices `K(v)`.
fn branch_data(v: &CharacterVectorSet) -> Result<(Vec<MultiplicitySequence>, Vec<Vec<usize>>)> {
    if v.is_empty() {
        return Err(Error::Empty);
    }
    let d = v.d();
    let mut branches = vec![];
    for j in 0..d {
        let coords: Vec<u64> = v.vectors().map(|x| x[j]).collect();
        if coords.contains(&0) {
            return Err(Error::Domain(format!(
                "a character vector has coordinate {} equal to 0",
                j + 1
            )));
        }
        branches.push(arf_closure_sequence(&coords)?);
    }
    let levels = v
        .vectors()
        .map(|x| {
            (0..d)
                .map(|j| branches[j].index_of_sum(x[j]).expect("coordinates lie in their closure"))
                .collect()
        })
        .collect();
    Ok((branches, levels))
}

/// The smallest Arf semigroup containing `v`, as a tree.
///
/// Each vector whose level indices differ on branches `j`, `j+1` caps the
/// split level `s_j` at the smaller index; the result takes every `s_j` as
/// large as the caps and condition c allow. Without caps the level is
/// bounded by `N − 1`, `N` being one more than the largest level index.
pub fn smallest_arf_tree(v: &CharacterVectorSet) -> Result<MultiplicityTree> {
    let (branches, levels) = branch_data(v)?;
    let d = v.d();
    let n = levels.iter().flatten().copied().max().unwrap_or(0) + 1;
    let splits = (0..d.saturating_sub(1))
        .map(|j| {
            let cap = levels
                .iter()
                .filter(|k| k[j] != k[j + 1])
                .map(|k| k[j].min(k[j + 1]))
                .min()
                .unwrap_or(n - 1);
            match max_valid_split(&branches[j], &branches[j + 1]) {
                Some(a) => cap.min(a),
                None => cap,
            }
        })
        .collect();
    MultiplicityTree::new(branches, splits)
}

pub fn smallest_arf_containing(v: &CharacterVectorSet) -> Result<GoodSemigroup> {
    smallest_arf_tree(v)?.to_semigroup()
}

/// Reference computation: intersects every tree over the same branches with
/// split levels below `N` that is valid and contains `v`.
pub fn smallest_arf_tree_by_enumeration(v: &CharacterVectorSet, exec: Execution) -> Result<MultiplicityTree> {
    let (branches, levels) = branch_data(v)?;
    let d = v.d();
    let n = levels.iter().flatten().copied().max().unwrap_or(0) + 1;
    let pairs = d.saturating_sub(1);
    let count = n.checked_pow(pairs as u32).ok_or_else(|| Error::Domain("profile space too large".into()))?;
    let candidates: Vec<Vec<usize>> = (0..count)
        .map(|mut c| {
            (0..pairs)
                .map(|_| {
                    let s = c % n;
                    c /= n;
                    s
                })
                .collect()
        })
        .collect();
    let accepted = exec.map(&candidates, |splits| {
        let t = MultiplicityTree::new(branches.clone(), splits.clone()).ok()?;
        (t.is_valid() && v.vectors().all(|x| t.member(x))).then_some(t)
    });
    accepted
        .into_iter()
        .flatten()
        .try_fold(None::<MultiplicityTree>, |acc, t| {
            Ok(Some(match acc {
                None => t,
                Some(a) => a.intersection(&t)?,
            }))
        })?
        .ok_or_else(|| Error::Domain("no tree contains the vectors".into()))
}

/// `v` determines `s`: its smallest Arf semigroup is `s`.
pub fn determines(v: &CharacterVectorSet, s: &GoodSemigroup) -> bool {
    v.d() == s.d() && smallest_arf_containing(v).map_or(false, |c| &c == s)
}

pub fn is_minimal_character_set(v: &CharacterVectorSet, s: &GoodSemigroup) -> bool {
    is_minimal_character_set_with(v, s, Execution::default())
}

/// Determines `s` while no proper subset does (all subsets are tried).
pub fn is_minimal_character_set_with(v: &CharacterVectorSet, s: &GoodSemigroup, exec: Execution) -> bool {
    if v.len() >= 64 || !determines(v, s) {
        return false;
    }
    let full = (1u64 << v.len()) - 1;
    let masks: Vec<u64> = (0..full).collect();
    exec.find_first(&masks, |&m| determines(&v.subset(m), s).then_some(())).is_none()
}

/// Removes vectors that are the minimum of two others, then greedily drops
/// vectors (in lexicographic order) that are not needed to determine `s`.
pub fn reduce_characters(v: &CharacterVectorSet, s: &GoodSemigroup) -> Result<CharacterVectorSet> {
    if !determines(v, s) {
        return Err(Error::Domain("the vectors do not determine the semigroup".into()));
    }
    let mut current = v.clone();
    'outer: loop {
        let list: Vec<Vec<u64>> = current.vectors().cloned().collect();
        for a in &list {
            for b in &list {
                let m: Vec<u64> = a.iter().zip(b).map(|(x, y)| *x.min(y)).collect();
                if &m != a && &m != b && current.contains(&m) {
                    current = current.without(&m);
                    continue 'outer;
                }
            }
        }
        break;
    }
    let list: Vec<Vec<u64>> = current.vectors().cloned().collect();
    for x in list {
        let smaller = current.without(&x);
        if determines(&smaller, s) {
            current = smaller;
        }
    }
    Ok(current)
}
