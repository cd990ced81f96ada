//! Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use arfcurve::mult_tree::max_valid_split;
use arfcurve::*;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

/// Valid multiplicity sequences with at most `len` stored entries, each at
/// most `max_entry`, built back to front as sums of successors.
pub fn sequence(len: usize, max_entry: u32) -> impl Strategy<Value = MultiplicitySequence> {
    (0..=len, proptest::collection::vec(1usize..=6, len)).prop_map(move |(l, ks)| {
        let mut entries: Vec<u32> = vec![];
        // entries[i] for i ≥ entries.len() are ones
        for i in (0..l).rev() {
            let mut tail: Vec<u32> = entries.clone();
            tail.reverse();
            let succ = |h: usize| *tail.get(h).unwrap_or(&1);
            let mut k = ks[i];
            if tail.is_empty() {
                k = k.max(2);
            }
            let mut sum: u32 = (0..k).map(succ).sum();
            while sum > max_entry && k > 1 {
                k -= 1;
                sum = (0..k).map(succ).sum();
            }
            if sum > max_entry || (tail.is_empty() && sum < 2) {
                break;
            }
            entries.push(sum);
        }
        entries.reverse();
        MultiplicitySequence::new(entries).expect("sums of successors are valid")
    })
}

/// Valid trees with up to `max_d` branches.
pub fn tree(max_d: usize, len: usize, max_entry: u32) -> impl Strategy<Value = MultiplicityTree> {
    (1..=max_d)
        .prop_flat_map(move |d| {
            (
                proptest::collection::vec(sequence(len, max_entry), d),
                proptest::collection::vec(0usize..=len, d - 1),
            )
        })
        .prop_map(|(branches, raw)| {
            let splits = raw
                .iter()
                .enumerate()
                .map(|(j, &s)| match max_valid_split(&branches[j], &branches[j + 1]) {
                    Some(a) => s.min(a),
                    None => s,
                })
                .collect();
            MultiplicityTree::new(branches, splits).unwrap()
        })
}

/// Pairs of trees over one branch collection.
pub fn tree_pair(max_d: usize, len: usize, max_entry: u32) -> impl Strategy<Value = (MultiplicityTree, MultiplicityTree)> {
    (tree(max_d, len, max_entry), proptest::collection::vec(0usize..=len, max_d)).prop_map(|(t, raw)| {
        let d = t.d();
        let splits = (0..d.saturating_sub(1))
            .map(|j| match max_valid_split(&t.branches()[j], &t.branches()[j + 1]) {
                Some(a) => raw[j].min(a),
                None => raw[j],
            })
            .collect();
        let u = MultiplicityTree::new(t.branches().to_vec(), splits).unwrap();
        (t, u)
    })
}

/// Closure of `⟨G⟩ ∩ [0, B]`, `B = 2 max G`, under `x + y − z` for members
/// `x ≥ y ≥ z`, everything above `B` counted as a member.
pub fn xyz_closure(generators: &[u64]) -> Vec<bool> {
    let b = 2 * *generators.iter().max().unwrap() as usize;
    let mut m = vec![false; b + 1];
    m[0] = true;
    for n in 1..=b {
        m[n] = generators.iter().any(|&g| n >= g as usize && m[n - g as usize]);
    }
    loop {
        let members: Vec<usize> = (0..=b).filter(|&n| m[n]).collect();
        let mut changed = false;
        for (ix, &x) in members.iter().enumerate() {
            for (iy, &y) in members.iter().enumerate().take(ix + 1) {
                for &z in &members[..=iy] {
                    let v = x + y - z;
                    if v <= b && !m[v] {
                        m[v] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

/// Explicit node graph of a tree up to level `height`: `(level, vector, parent)`.
pub fn explicit_nodes(t: &MultiplicityTree, height: usize) -> Vec<(usize, Vec<u64>, Option<usize>)> {
    let d = t.d();
    let mut out: Vec<(usize, Vec<u64>, Option<usize>)> = vec![];
    let mut prev: Vec<(BTreeSet<usize>, usize)> = vec![];
    for level in 0..height {
        // branches j and j+1 share a node while level ≤ s_j
        let mut groups: Vec<BTreeSet<usize>> = vec![];
        for j in 0..d {
            if j > 0 && level <= t.splits()[j - 1] {
                groups.last_mut().unwrap().insert(j);
            } else {
                groups.push([j].into_iter().collect());
            }
        }
        let mut cur = vec![];
        for g in groups {
            let vector = (0..d)
                .map(|h| if g.contains(&h) { t.branches()[h].entry(level) as u64 } else { 0 })
                .collect();
            let parent = prev.iter().find(|(pg, _)| g.is_subset(pg)).map(|(_, i)| *i);
            out.push((level, vector, parent));
            cur.push((g, out.len() - 1));
        }
        prev = cur;
    }
    out
}

/// All rooted-subtree sums of the explicit graph, capped at `cap`.
pub fn subtree_sums(t: &MultiplicityTree, cap: &[u64]) -> BTreeSet<Vec<u64>> {
    let height = *cap.iter().max().unwrap() as usize + 2;
    let nodes = explicit_nodes(t, height);
    let mut children = vec![vec![]; nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        if let Some(p) = n.2 {
            children[p].push(i);
        }
    }
    let d = t.d();
    let capped = |v: &[u64]| -> Vec<u64> { v.iter().zip(cap).map(|(a, c)| *a.min(c)).collect() };
    // sums of subtrees rooted at each node, bottom up
    let mut sums: Vec<BTreeSet<Vec<u64>>> = vec![BTreeSet::new(); nodes.len()];
    for i in (0..nodes.len()).rev() {
        let mut acc: BTreeSet<Vec<u64>> = [nodes[i].1.clone()].into_iter().collect();
        for &c in &children[i] {
            let mut next = acc.clone();
            for a in &acc {
                for b in &sums[c] {
                    let v: Vec<u64> = (0..d).map(|k| a[k] + b[k]).collect();
                    next.insert(capped(&v));
                }
            }
            acc = next;
        }
        sums[i] = acc.into_iter().map(|v| capped(&v)).collect();
    }
    let mut all = sums[0].clone();
    all.insert(vec![0; d]);
    all
}

pub fn strings(v: &[&[&str]]) -> Vec<Vec<String>> {
    v.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect()
}

pub fn curve(vars: &[&str], gens: &[&[&str]], truncation: usize) -> CurveAlgebra {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    CurveAlgebra::parse(&vars, truncation, &strings(gens)).unwrap()
}

/// Values `≤ bound` by a per-vector kernel computation over the span of all
/// generator monomials of degree `≤ max bound + 1` (local algebras only).
pub fn brute_value_set(c: &CurveAlgebra, bound: &[u64]) -> Vec<Vec<u64>> {
    let sizes: Vec<usize> = bound.iter().map(|&b| b as usize + 1).collect();
    let flat = |g: &[TruncatedSeries]| -> Vec<BigRational> {
        g.iter()
            .zip(&sizes)
            .flat_map(|(s, &n)| (0..n).map(move |k| s.coeff(k).cloned().unwrap_or_else(BigRational::zero)))
            .collect()
    };
    let deg = *sizes.iter().max().unwrap();
    let gens: Vec<Vec<TruncatedSeries>> = c.generators().to_vec();
    let one: Vec<TruncatedSeries> = sizes.iter().map(|&n| TruncatedSeries::one(n)).collect();
    let mut layer = vec![one];
    let mut monomials: Vec<Vec<BigRational>> = vec![flat(&layer[0])];
    // monomials with non-decreasing generator indices
    let mut layer_idx = vec![0usize];
    for _ in 0..deg {
        let mut next = vec![];
        let mut next_idx = vec![];
        for (m, &start) in layer.iter().zip(&layer_idx) {
            for (gi, g) in gens.iter().enumerate().skip(start) {
                let p: Vec<TruncatedSeries> =
                    m.iter().zip(g).zip(&sizes).map(|((a, b), &n)| a.mul(b).truncate(n)).collect();
                monomials.push(flat(&p));
                next.push(p);
                next_idx.push(gi);
            }
        }
        layer = next;
        layer_idx = next_idx;
    }
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &n| { let o = *acc; *acc += n; Some(o) }).collect();
    let mut out = vec![];
    for alpha in box_points(bound) {
        // kernel of the constraints "coefficient (j, e) = 0 for e < α_j"
        let constrained: Vec<usize> = (0..sizes.len())
            .flat_map(|j| (0..alpha[j] as usize).map(move |e| (j, e)))
            .map(|(j, e)| offsets[j] + e)
            .collect();
        let kernel = kernel_span(&monomials, &constrained);
        let ok = (0..sizes.len()).all(|j| kernel.iter().any(|w| !w[offsets[j] + alpha[j] as usize].is_zero()));
        if ok {
            out.push(alpha);
        }
    }
    out
}

fn box_points(bound: &[u64]) -> Vec<Vec<u64>> {
    let mut pts = vec![vec![]];
    for &b in bound {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<u64>| (0..=b).map(move |x| { let mut q = p.clone(); q.push(x); q }))
            .collect();
    }
    pts
}

/// Spanning set of `{Σ c_i v_i : the constrained columns vanish}`.
fn kernel_span(vectors: &[Vec<BigRational>], constrained: &[usize]) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = vectors.to_vec();
    let mut col_done = vec![];
    for &c in constrained {
        if let Some(piv) = rows.iter().position(|r| !r[c].is_zero()) {
            let pr = rows.remove(piv);
            for r in rows.iter_mut() {
                if !r[c].is_zero() {
                    let f = &r[c] / &pr[c];
                    for (x, y) in r.iter_mut().zip(&pr) {
                        *x -= &f * y;
                    }
                }
            }
            col_done.push(c);
        }
    }
    rows
}

pub type Fixture = (&'static str, &'static [&'static str], &'static [&'static [&'static str]]);

/// Every parametrized curve used across the suites.
pub const FIXTURES: &[Fixture] = &[
    ("t4_t6t7", &["t"], &[&["t^4"], &["t^6+t^7"]]),
    ("t4_t6_t13", &["t"], &[&["t^4"], &["t^6"], &["t^13"]]),
    ("smooth", &["t"], &[&["t"]]),
    ("two_branch", &["t", "u"], &[&["t^2", "u^2"], &["0", "u^3"], &["t^3", "0"]]),
    ("two_branch_blown_up", &["t", "u"], &[&["t^2", "u^2"], &["0", "u"], &["t", "0"]]),
    ("split_at_0", &["t", "u"], &[&["t^4", "u^3"], &["t^6+t^7", "u^2"]]),
    ("split_at_2", &["t", "u"], &[&["t^4", "2u^2"], &["t^6+t^7", "u^3"]]),
    ("split_at_3", &["t", "u"], &[&["t^4", "u^2"], &["t^6+t^7", "u^3"]]),
    ("pair_u", &["t", "u"], &[&["t^4", "u^2"], &["t^9", "u^4"], &["t^6", "u^5"]]),
    (
        "pair_r",
        &["t", "u"],
        &[
            &["t^4", "u^2"],
            &["t^6", "0"],
            &["t^8", "0"],
            &["t^9", "0"],
            &["t^10", "0"],
            &["t^11", "0"],
            &["0", "u^4"],
            &["0", "u^5"],
        ],
    ),
    ("pair_tilde", &["t", "u"], &[&["t^4", "u^2"], &["t^6+t^7", "u^5"]]),
    ("cusp_pair", &["t", "u"], &[&["t^2", "u^3"], &["t^3", "u^5"], &["t^4", "u^7"]]),
];

pub fn fixture(name: &str, truncation: usize) -> CurveAlgebra {
    let (_, vars, gens) = FIXTURES.iter().find(|f| f.0 == name).expect("known fixture");
    curve(vars, gens, truncation)
}
