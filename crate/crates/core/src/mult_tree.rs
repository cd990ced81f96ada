//! Multiplicity trees of local Arf semigroups of ℕ^d.
//!
//! A tree is stored as its branch multiplicity sequences together with the
//! split levels `s_j`: branches `j` and `j+1` share a node on every level
//! `≤ s_j` and are apart from level `s_j + 1` on. Branches glued together
//! always occupy consecutive indices, so the nodes at level `i` are the
//! maximal runs of branches whose adjacent split levels are all `≥ i`.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::good_semigroup::GoodSemigroup;
use crate::numerical::MultiplicitySequence;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityTree {
    branches: Vec<MultiplicitySequence>,
    splits: Vec<usize>,
}

/// A node of the explicit part of a tree (levels below the stable level).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeNode {
    pub level: usize,
    pub vector: Vec<u64>,
    pub parent: Option<usize>,
}

/// `T^(N)`: half-distances between consecutive branches at level `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitProfile {
    pub level: usize,
    pub entries: Vec<usize>,
}

/// First node (by level, then left to right) whose vector is not the sum of
/// a finite subtree above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeViolation {
    pub level: usize,
    /// Branches through the node, 0-based.
    pub branches: Vec<usize>,
    /// The two adjacent branches whose decompositions cannot share nodes.
    pub pair: (usize, usize),
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.branches.iter().map(|b| (b + 1).to_string()).collect();
        write!(
            f,
            "condition c fails at the level-{} node of branches {{{}}}: branches {} and {} need \
             subtrees of different lengths through shared nodes",
            self.level,
            names.join(","),
            self.pair.0 + 1,
            self.pair.1 + 1
        )
    }
}

/// Largest split level for which two adjacent branches satisfy condition c,
/// `None` when every level works.
pub fn max_valid_split(a: &MultiplicitySequence, b: &MultiplicitySequence) -> Option<usize> {
    let ka = a.decomposition_lengths();
    let kb = b.decomposition_lengths();
    let n = ka.len().max(kb.len());
    (0..n)
        .filter_map(|i| {
            let x = *ka.get(i).unwrap_or(&1);
            let y = *kb.get(i).unwrap_or(&1);
            (x != y).then_some(i + x.min(y))
        })
        .min()
}

impl MultiplicityTree {
    pub fn new(branches: Vec<MultiplicitySequence>, splits: Vec<usize>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidTree("a tree needs at least one branch".into()));
        }
        if splits.len() + 1 != branches.len() {
            return Err(Error::DimensionMismatch {
                expected: branches.len() - 1,
                got: splits.len(),
            });
        }
        Ok(MultiplicityTree { branches, splits })
    }

    /// One-branch tree of a multiplicity sequence.
    pub fn single(seq: MultiplicitySequence) -> Self {
        MultiplicityTree {
            branches: vec![seq],
            splits: vec![],
        }
    }

    pub fn from_profile(branches: Vec<MultiplicitySequence>, profile: &SplitProfile) -> Result<Self> {
        let splits = profile
            .entries
            .iter()
            .map(|&n| {
                if n == 0 || n > profile.level {
                    Err(Error::InvalidTree(format!(
                        "profile entry {n} is not in 1..={}",
                        profile.level
                    )))
                } else {
                    Ok(profile.level - n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(branches, splits)
    }

    pub fn d(&self) -> usize {
        self.branches.len()
    }

    pub fn branches(&self) -> &[MultiplicitySequence] {
        &self.branches
    }

    /// Split levels `s_j` of adjacent branches.
    pub fn splits(&self) -> &[usize] {
        &self.splits
    }

    /// Level of the branching node of branches `j` and `h` (0-based, `j ≠ h`).
    pub fn split_level(&self, j: usize, h: usize) -> Result<usize> {
        let d = self.d();
        for &x in &[j, h] {
            if x >= d {
                return Err(Error::IndexOutOfRange { index: x, d });
            }
        }
        if j == h {
            return Err(Error::Domain("a branch has no branching node with itself".into()));
        }
        let (a, b) = (j.min(h), j.max(h));
        Ok(*self.splits[a..b].iter().min().unwrap())
    }

    /// First level from which every branch carries its own unit vector.
    pub fn stable_level(&self) -> usize {
        let deepest_seq = self.branches.iter().map(|b| b.prefix().len()).max().unwrap_or(0);
        let deepest_split = self.splits.iter().map(|s| s + 1).max().unwrap_or(0);
        1.max(deepest_seq).max(deepest_split)
    }

    /// Maximal runs of branches sharing the node at `level`.
    pub fn blocks_at(&self, level: usize) -> Vec<std::ops::Range<usize>> {
        let mut blocks = vec![];
        let mut start = 0;
        for j in 0..self.d() {
            if j + 1 == self.d() || self.splits[j] < level {
                blocks.push(start..j + 1);
                start = j + 1;
            }
        }
        blocks
    }

    fn node_vector(&self, level: usize, block: &std::ops::Range<usize>) -> Vec<u64> {
        (0..self.d())
            .map(|h| {
                if block.contains(&h) {
                    self.branches[h].entry(level) as u64
                } else {
                    0
                }
            })
            .collect()
    }

    /// Explicit nodes, level by level and left to right; parents precede children.
    pub fn nodes(&self) -> Vec<TreeNode> {
        let mut nodes = vec![];
        let mut prev: Vec<(std::ops::Range<usize>, usize)> = vec![];
        for level in 0..self.stable_level() {
            let mut current = vec![];
            for block in self.blocks_at(level) {
                let parent = prev
                    .iter()
                    .find(|(r, _)| r.start <= block.start && block.end <= r.end)
                    .map(|(_, idx)| *idx);
                current.push((block.clone(), nodes.len()));
                nodes.push(TreeNode {
                    level,
                    vector: self.node_vector(level, &block),
                    parent,
                });
            }
            prev = current;
        }
        nodes
    }

    /// Rebuilds a tree from an explicit node list. Checks the structural
    /// conditions (levels, parents, unit tail, supports of vectors, one node
    /// per branch and level) and the per-branch sequences.
    pub fn from_nodes(d: usize, stable_level: usize, nodes: &[TreeNode]) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTree(m));
        if d == 0 {
            return bad("a tree needs at least one branch".into());
        }
        if stable_level == 0 {
            return bad("stable level must be at least 1".into());
        }
        let mut supports: Vec<std::ops::Range<usize>> = vec![];
        let mut entries = vec![vec![0u32; stable_level]; d];
        let mut owner = vec![vec![None::<usize>; stable_level]; d];
        for (idx, node) in nodes.iter().enumerate() {
            if node.vector.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: node.vector.len() });
            }
            if node.level >= stable_level {
                return bad(format!("node {idx} lies at or above the stable level {stable_level}"));
            }
            let support: Vec<usize> = (0..d).filter(|&h| node.vector[h] > 0).collect();
            if support.is_empty() {
                return bad(format!("node {idx} has the zero vector"));
            }
            let range = support[0]..support[support.len() - 1] + 1;
            if range.len() != support.len() {
                return bad(format!("node {idx} glues branches that are not consecutive"));
            }
            match (node.level, node.parent) {
                (0, None) => {}
                (0, Some(_)) => return bad(format!("root node {idx} has a parent")),
                (_, None) => return bad(format!("node {idx} above level 0 has no parent")),
                (l, Some(p)) => {
                    let ok = p < idx && nodes[p].level + 1 == l && {
                        let pr = &supports[p];
                        pr.start <= range.start && range.end <= pr.end
                    };
                    if !ok {
                        return bad(format!("node {idx} has an inconsistent parent {p}"));
                    }
                }
            }
            for h in range.clone() {
                if owner[h][node.level].is_some() {
                    return bad(format!("branch {} has two nodes on level {}", h + 1, node.level));
                }
                owner[h][node.level] = Some(idx);
                entries[h][node.level] = node.vector[h] as u32;
            }
            supports.push(range);
        }
        for h in 0..d {
            if let Some(level) = owner[h].iter().position(Option::is_none) {
                return bad(format!("branch {} has no node on level {level}", h + 1));
            }
        }
        if owner.iter().map(|o| o[0]).collect::<std::collections::BTreeSet<_>>().len() != 1 {
            return bad("level 0 must consist of a single root".into());
        }
        let mut splits = vec![];
        for j in 0..d.saturating_sub(1) {
            let s = (0..stable_level)
                .take_while(|&l| owner[j][l] == owner[j + 1][l])
                .last()
                .unwrap();
            if (s + 1..stable_level).any(|l| owner[j][l] == owner[j + 1][l]) {
                return bad(format!("branches {} and {} are glued again after splitting", j + 1, j + 2));
            }
            splits.push(s);
        }
        let branches = entries
            .into_iter()
            .enumerate()
            .map(|(h, e)| {
                MultiplicitySequence::new(e).map_err(|err| match err {
                    Error::InvalidSequence { index } => Error::InvalidTree(format!(
                        "condition c fails on branch {} at level {index}",
                        h + 1
                    )),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let tree = MultiplicityTree { branches, splits };
        if tree.stable_level() > stable_level {
            return bad("branches must be apart with unit vectors at the stable level".into());
        }
        Ok(tree)
    }

    pub fn validate(&self) -> std::result::Result<(), TreeViolation> {
        let ks: Vec<Vec<usize>> = self.branches.iter().map(|b| b.decomposition_lengths()).collect();
        let k = |h: usize, i: usize| *ks[h].get(i).unwrap_or(&1);
        for level in 0..self.stable_level() {
            for block in self.blocks_at(level) {
                for j in block.start..block.end - 1 {
                    let (a, b) = (k(j, level), k(j + 1, level));
                    if a != b && level + a.min(b) < self.splits[j] {
                        return Err(TreeViolation {
                            level,
                            branches: block.clone().collect(),
                            pair: (j, j + 1),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Exact membership of the rooted-subtree sums.
    ///
    /// A nonzero rooted subtree runs through levels `0..=K_j` on branch `j`;
    /// shared nodes force `K_j = K_{j+1}` unless both reach past `s_j`.
    pub fn member(&self, alpha: &[u64]) -> bool {
        if alpha.iter().all(|&x| x == 0) {
            return true;
        }
        let mut ks = Vec::with_capacity(self.d());
        for (b, &x) in self.branches.iter().zip(alpha) {
            match b.index_of_sum(x) {
                Some(k) => ks.push(k),
                None => return false,
            }
        }
        self.splits
            .iter()
            .enumerate()
            .all(|(j, &s)| ks[j] == ks[j + 1] || ks[j].min(ks[j + 1]) >= s)
    }

    /// A box corner `C` with `member(α) = member(min(α, C))`.
    pub fn corner(&self) -> Vec<u64> {
        (0..self.d())
            .map(|j| {
                let mut k = self.branches[j].prefix().len().saturating_sub(1);
                if j > 0 {
                    k = k.max(self.splits[j - 1]);
                }
                if j + 1 < self.d() {
                    k = k.max(self.splits[j]);
                }
                self.branches[j].prefix_sum(k)
            })
            .collect()
    }

    pub fn to_semigroup(&self) -> Result<GoodSemigroup> {
        self.to_semigroup_with(Execution::default())
    }

    pub fn to_semigroup_with(&self, exec: Execution) -> Result<GoodSemigroup> {
        if let Err(v) = self.validate() {
            return Err(Error::InvalidTree(v.to_string()));
        }
        GoodSemigroup::from_membership(self.d(), &self.corner(), |a| self.member(a), exec)
    }

    /// Inverse of [`to_semigroup`](Self::to_semigroup).
    pub fn from_semigroup(s: &GoodSemigroup) -> Result<Self> {
        if !s.is_local() {
            return Err(Error::NotLocal);
        }
        let d = s.d();
        let branches = (0..d)
            .map(|j| s.projection(j)?.to_sequence())
            .collect::<Result<Vec<_>>>()?;
        let corner = s.corner();
        let mut splits = vec![];
        for j in 0..d.saturating_sub(1) {
            let plane = s.project(&[j, j + 1])?;
            let limit = corner[j].max(corner[j + 1]) as usize + 1;
            let mut found = None;
            for k in 0..=limit {
                let alpha = [branches[j].prefix_sum(k), branches[j + 1].prefix_sum(k)];
                let local = match plane.residue(&alpha) {
                    Ok(r) => r.is_local(),
                    Err(_) => return Err(Error::NotArf),
                };
                if !local {
                    found = Some(k);
                    break;
                }
            }
            splits.push(found.ok_or(Error::NotArf)?);
        }
        let tree = MultiplicityTree { branches, splits };
        match tree.to_semigroup() {
            Ok(back) if &back == s => Ok(tree),
            _ => Err(Error::NotArf),
        }
    }

    pub fn split_profile(&self, level: usize) -> Result<SplitProfile> {
        if let Some(&s) = self.splits.iter().find(|&&s| s >= level) {
            return Err(Error::InvalidTree(format!(
                "branches are still glued at level {level} (split level {s})"
            )));
        }
        Ok(SplitProfile {
            level,
            entries: self.splits.iter().map(|s| level - s).collect(),
        })
    }

    /// Identifies the two nodes immediately above the branching node of
    /// branches `j` and `j+1`.
    pub fn pinch(&self, j: usize) -> Result<Self> {
        if j + 1 >= self.d() {
            return Err(Error::Domain(format!(
                "nothing to pinch: pair {} needs branches {} and {}",
                j + 1,
                j + 1,
                j + 2
            )));
        }
        let mut t = self.clone();
        t.splits[j] += 1;
        Ok(t)
    }

    fn same_branches(&self, other: &Self) -> Result<()> {
        if self.branches != other.branches {
            return Err(Error::DifferentBranches);
        }
        Ok(())
    }

    /// `self ≤ other`: reachable from `other` by pinchings, equivalently its
    /// semigroup is contained in that of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_branches(other)?;
        Ok(self.splits.iter().zip(&other.splits).all(|(a, b)| a >= b))
    }

    /// Tree of the intersection of the two semigroups.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_branches(other)?;
        let splits = self.splits.iter().zip(&other.splits).map(|(a, b)| *a.max(b)).collect();
        Ok(MultiplicityTree {
            branches: self.branches.clone(),
            splits,
        })
    }

    /// `Σ_{i ≤ s} e^j_i e^h_i` with `s` the level of the branching node.
    pub fn noether_sum(&self, j: usize, h: usize) -> Result<u64> {
        let s = self.split_level(j, h)?;
        Ok((0..=s)
            .map(|i| self.branches[j].entry(i) as u64 * self.branches[h].entry(i) as u64)
            .sum())
    }

    /// The tree with its branches reordered: branch `i` of the result is
    /// branch `perm[i]` of `self`. `None` if gluing would stop being contiguous.
    pub fn permuted(&self, perm: &[usize]) -> Option<Self> {
        let d = self.d();
        let glue = |a: usize, b: usize| self.split_level(a, b).unwrap();
        let splits: Vec<usize> = (0..d.saturating_sub(1)).map(|i| glue(perm[i], perm[i + 1])).collect();
        for a in 0..d {
            for b in a + 1..d {
                let via = *splits[a..b].iter().min().unwrap();
                if via != glue(perm[a], perm[b]) {
                    return None;
                }
            }
        }
        Some(MultiplicityTree {
            branches: perm.iter().map(|&p| self.branches[p].clone()).collect(),
            splits,
        })
    }

    /// Lexicographically smallest node serialization over all branch
    /// permutations that keep glued branches consecutive, with the
    /// permutation used (`perm[i]` is the original index of new branch `i`).
    pub fn canonical_form(&self) -> (Self, Vec<usize>) {
        let d = self.d();
        let mut best: Option<(Vec<TreeNode>, Self, Vec<usize>)> = None;
        let mut perm: Vec<usize> = (0..d).collect();
        loop {
            if let Some(t) = self.permuted(&perm) {
                let key = t.nodes();
                if best.as_ref().map_or(true, |(k, _, _)| key < *k) {
                    best = Some((key, t, perm.clone()));
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let (_, t, p) = best.expect("identity permutation always qualifies");
        (t, p)
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        self.d() == other.d() && self.canonical_form().0 == other.canonical_form().0
    }

    pub fn render_ascii(&self) -> String {
        let nodes = self.nodes();
        let mut children = vec![vec![]; nodes.len()];
        for (i, n) in nodes.iter().enumerate() {
            if let Some(p) = n.parent {
                children[p].push(i);
            }
        }
        let mut out = String::new();
        fn walk(
            i: usize,
            prefix: &str,
            last: bool,
            root: bool,
            nodes: &[TreeNode],
            children: &[Vec<usize>],
            out: &mut String,
        ) {
            let label = format!("{}", VectorDisplay(&nodes[i].vector));
            let tail = if children[i].is_empty() { " ..." } else { "" };
            if root {
                let _ = writeln!(out, "{label}");
            } else {
                let branch = if last { "`-- " } else { "|-- " };
                let _ = writeln!(out, "{prefix}{branch}{label}{tail}");
            }
            let next = if root {
                String::new()
            } else {
                format!("{prefix}{}", if last { "    " } else { "|   " })
            };
            for (n, &c) in children[i].iter().enumerate() {
                walk(c, &next, n + 1 == children[i].len(), false, nodes, children, out);
            }
        }
        walk(0, "", true, true, &nodes, &children, &mut out);
        out
    }

    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph multiplicity_tree {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, n) in self.nodes().iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", VectorDisplay(&n.vector));
            if let Some(p) = n.parent {
                let _ = writeln!(out, "  n{p} -> n{i};");
            }
        }
        out.push_str("}\n");
        out
    }
}

struct VectorDisplay<'a>(&'a [u64]);

impl fmt::Display for VectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> MultiplicitySequence {
        MultiplicitySequence::new(v.to_vec()).unwrap()
    }

    fn arf_pair() -> MultiplicityTree {
        MultiplicityTree::new(vec![seq(&[4, 2, 2]), seq(&[2, 2])], vec![1]).unwrap()
    }

    fn cusp_pair() -> MultiplicityTree {
        MultiplicityTree::new(vec![seq(&[2]), seq(&[3, 2])], vec![2]).unwrap()
    }

    fn small_example() -> MultiplicityTree {
        MultiplicityTree::new(vec![seq(&[2]), seq(&[2])], vec![1]).unwrap()
    }

    fn split_tree(s: usize) -> MultiplicityTree {
        MultiplicityTree::new(vec![seq(&[4, 2, 2]), seq(&[2])], vec![s]).unwrap()
    }

    #[test]
    fn validity() {
        assert!(small_example().is_valid());
        assert!(MultiplicityTree::single(seq(&[4, 2, 2])).is_valid());
        let glued = arf_pair().pinch(0).unwrap();
        let v = glued.validate().unwrap_err();
        assert_eq!(v.level, 0);
        assert_eq!(v.pair, (0, 1));
        assert_eq!(max_valid_split(&seq(&[4, 2, 2]), &seq(&[2, 2])), Some(1));
        assert_eq!(max_valid_split(&seq(&[2]), &seq(&[2])), None);
    }

    #[test]
    fn to_semigroup_examples() {
        let s = arf_pair().to_semigroup().unwrap();
        let expected =
            GoodSemigroup::from_literal(2, &[8, 4], &[vec![0, 0], vec![4, 2], vec![6, 4], vec![8, 4]])
                .unwrap();
        assert_eq!(s, expected);
        let one = MultiplicityTree::single(seq(&[4, 2, 2])).to_semigroup().unwrap();
        assert_eq!(one.corner(), &[8]);
        assert_eq!(one.small_elements(), vec![vec![0], vec![4], vec![6], vec![8]]);
        assert!(small_example().to_semigroup().unwrap().contains(&[3, 3]).unwrap());
        let s2 = cusp_pair().to_semigroup().unwrap();
        assert_eq!(s2.conductor(), &[4, 6]);
        assert_eq!(s2.small_elements().len(), 4);
    }

    #[test]
    fn from_semigroup_examples() {
        for t in [arf_pair(), cusp_pair(), small_example(), split_tree(0), split_tree(2), split_tree(3)] {
            let s = t.to_semigroup().unwrap();
            assert_eq!(MultiplicityTree::from_semigroup(&s).unwrap(), t);
        }
        let n = GoodSemigroup::naturals(1);
        assert!(MultiplicityTree::from_semigroup(&n).unwrap().branches()[0].is_ones());
    }

    #[test]
    fn profiles_and_order() {
        assert_eq!(arf_pair().split_profile(3).unwrap().entries, vec![2]);
        assert_eq!(split_tree(0).split_profile(2).unwrap().entries, vec![2]);
        assert!(MultiplicityTree::single(seq(&[2])).split_profile(3).unwrap().entries.is_empty());
        assert!(arf_pair().split_profile(1).is_err());
        let back = MultiplicityTree::from_profile(vec![seq(&[4, 2, 2]), seq(&[2, 2])], &SplitProfile {
            level: 3,
            entries: vec![2],
        })
        .unwrap();
        assert_eq!(back, arf_pair());
        let at0 = MultiplicityTree::new(arf_pair().branches().to_vec(), vec![0]).unwrap();
        assert!(arf_pair().leq(&at0).unwrap());
        assert!(!at0.leq(&arf_pair()).unwrap());
        assert!(arf_pair().leq(&arf_pair()).unwrap());
        assert_eq!(arf_pair().leq(&cusp_pair()), Err(Error::DifferentBranches));
    }

    #[test]
    fn intersections() {
        assert_eq!(split_tree(2).intersection(&split_tree(3)).unwrap(), split_tree(3));
        assert_eq!(split_tree(0).intersection(&split_tree(3)).unwrap(), split_tree(3));
        assert_eq!(arf_pair().intersection(&arf_pair()).unwrap(), arf_pair());
    }

    #[test]
    fn noether_sums() {
        assert_eq!(small_example().noether_sum(0, 1).unwrap(), 5);
        assert_eq!(split_tree(0).noether_sum(0, 1).unwrap(), 8);
        assert_eq!(split_tree(2).noether_sum(0, 1).unwrap(), 12);
        assert_eq!(split_tree(3).noether_sum(1, 0).unwrap(), 13);
        assert!(split_tree(0).noether_sum(1, 1).is_err());
    }

    #[test]
    fn nodes_round_trip() {
        for t in [arf_pair(), cusp_pair(), split_tree(3), MultiplicityTree::single(MultiplicityTree::single(seq(&[])).branches()[0].clone())] {
            let nodes = t.nodes();
            assert_eq!(MultiplicityTree::from_nodes(t.d(), t.stable_level(), &nodes).unwrap(), t);
        }
        let n = arf_pair().nodes();
        assert_eq!(n[0].vector, vec![4, 2]);
        assert_eq!(n[1].vector, vec![2, 2]);
        assert_eq!(n[2], TreeNode { level: 2, vector: vec![2, 0], parent: Some(1) });
        assert_eq!(n[3], TreeNode { level: 2, vector: vec![0, 1], parent: Some(1) });
    }

    #[test]
    fn canonical_forms() {
        let t = arf_pair();
        let swapped = t.permuted(&[1, 0]).unwrap();
        assert_ne!(swapped, t);
        assert_eq!(swapped.canonical_form().0, t.canonical_form().0);
        assert!(t.equivalent(&swapped));
        assert!(!t.equivalent(&cusp_pair()));
        let ones = || seq(&[]);
        let t3 = MultiplicityTree::new(vec![ones(), ones(), ones()], vec![1, 3]).unwrap();
        let (c, perm) = t3.canonical_form();
        assert_eq!(c.splits(), &[1, 3]);
        assert_eq!(perm, vec![0, 1, 2]);
        let other = MultiplicityTree::new(vec![ones(), ones(), ones()], vec![3, 1]).unwrap();
        assert_eq!(other.canonical_form().0, c);
        // branch 0 cannot sit between the two glued branches
        assert!(t3.permuted(&[1, 0, 2]).is_none());
    }

    #[test]
    fn renderers() {
        let a = arf_pair().render_ascii();
        assert!(a.starts_with("(4,2)\n`-- (2,2)\n"));
        assert!(arf_pair().render_dot().contains("n1 -> n2;"));
    }
}
