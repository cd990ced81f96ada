//! Curves given by explicit parametrizations: each generator is a `d`-tuple
//! of truncated power series, component `j` lying in `k[[t_j]]`.
//!
//! The algebra of a tuple list is the complete `k`-algebra the tuples
//! generate inside `k[[t_1]] × … × k[[t_d]]`. Generators may carry constant
//! terms that differ between branches; such an algebra is semilocal, with
//! one local factor for each class of branches on which all constants agree.

mod parse;
pub mod series;
mod values;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use parse::parse_series;
pub use series::TruncatedSeries;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::good_semigroup::GoodSemigroup;
use crate::mult_tree::MultiplicityTree;
use crate::numerical::MultiplicitySequence;

/// One element of `k[[t_1]] × … × k[[t_d]]`.
pub type SeriesTuple = Vec<TruncatedSeries>;

pub const DEFAULT_TRUNCATION: usize = 64;

/// Componentwise order of vanishing.
pub fn valuation(f: &[TruncatedSeries]) -> Result<Vec<u64>> {
    f.iter()
        .enumerate()
        .map(|(j, s)| {
            s.order().map(|o| o as u64).ok_or(Error::Undecidable {
                component: j + 1,
                order: s.precision() as u32,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAlgebra {
    d: usize,
    generators: Vec<SeriesTuple>,
}

/// Multiplicity tree of a curve together with the branch order it uses:
/// branch `i` of `tree` is branch `branch_order[i]` of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveTree {
    pub tree: MultiplicityTree,
    pub branch_order: Vec<usize>,
}

impl CurveTree {
    /// Value semigroup of the tree in the curve's own branch order.
    pub fn semigroup(&self) -> Result<GoodSemigroup> {
        let in_tree = self.tree.to_semigroup()?;
        if self.branch_order.iter().enumerate().all(|(i, &b)| i == b) {
            return Ok(in_tree);
        }
        let d = self.tree.d();
        let mut corner = vec![0; d];
        for (i, &b) in self.branch_order.iter().enumerate() {
            corner[b] = in_tree.corner()[i];
        }
        let order = &self.branch_order;
        GoodSemigroup::from_membership(
            d,
            &corner,
            |a| {
                let permuted: Vec<u64> = order.iter().map(|&b| a[b]).collect();
                in_tree.member(&permuted)
            },
            Execution::default(),
        )
    }
}

fn constants(g: &[TruncatedSeries]) -> Result<Vec<BigRational>> {
    g.iter()
        .map(|s| {
            s.constant_term()
                .cloned()
                .ok_or_else(|| Error::Truncation("a generator has no known constant term".into()))
        })
        .collect()
}

impl CurveAlgebra {
    /// Normalizes the generators: a constant shared by all components is
    /// subtracted, and generators vanishing to their precision are dropped.
    pub fn new(d: usize, generators: Vec<SeriesTuple>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("a curve needs at least one branch".into()));
        }
        let mut gens = vec![];
        for g in generators {
            if g.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: g.len() });
            }
            let c = constants(&g)?;
            let g: SeriesTuple = if c.iter().all(|x| *x == c[0]) && !c[0].is_zero() {
                g.iter()
                    .map(|s| s.sub(&TruncatedSeries::constant(c[0].clone(), s.precision())))
                    .collect()
            } else {
                g
            };
            if g.iter().any(|s| !s.is_known_zero()) {
                gens.push(g);
            }
        }
        Ok(CurveAlgebra { d, generators: gens })
    }

    /// Parses generator strings; `variables[j]` is the parameter of branch `j`.
    pub fn parse(variables: &[String], truncation: usize, generators: &[Vec<String>]) -> Result<Self> {
        let d = variables.len();
        let mut gens = vec![];
        for (gi, g) in generators.iter().enumerate() {
            if g.len() != d {
                return Err(Error::Format(format!(
                    "generator {} has {} components, expected {d}",
                    gi + 1,
                    g.len()
                )));
            }
            let tuple = g
                .iter()
                .enumerate()
                .map(|(j, src)| parse_series(src, &variables[j], variables, truncation))
                .collect::<Result<SeriesTuple>>()?;
            gens.push(tuple);
        }
        Self::new(d, gens)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[SeriesTuple] {
        &self.generators
    }

    /// All constant terms agree on every branch.
    pub fn is_local_ring(&self) -> bool {
        self.generators.iter().all(|g| match constants(g) {
            Ok(c) => c.iter().all(|x| *x == c[0]),
            Err(_) => false,
        })
    }

    /// Local factors: classes of branches on which every generator has the
    /// same constant, ordered by smallest branch, each with its algebra.
    pub fn local_components(&self) -> Result<Vec<(Vec<usize>, CurveAlgebra)>> {
        let consts = self
            .generators
            .iter()
            .map(|g| constants(g))
            .collect::<Result<Vec<_>>>()?;
        let mut classes: BTreeMap<Vec<BigRational>, Vec<usize>> = BTreeMap::new();
        for j in 0..self.d {
            let key: Vec<BigRational> = consts.iter().map(|c| c[j].clone()).collect();
            classes.entry(key).or_default().push(j);
        }
        let mut blocks: Vec<Vec<usize>> = classes.into_values().collect();
        blocks.sort();
        blocks
            .into_iter()
            .map(|block| {
                let gens = self
                    .generators
                    .iter()
                    .map(|g| block.iter().map(|&j| g[j].clone()).collect())
                    .collect();
                Ok((block.clone(), CurveAlgebra::new(block.len(), gens)?))
            })
            .collect()
    }

    fn require_local(&self) -> Result<()> {
        if self.is_local_ring() {
            Ok(())
        } else {
            Err(Error::NotLocal)
        }
    }

    /// Smallest value of the maximal ideal, branch by branch.
    pub fn fine_multiplicity(&self) -> Result<Vec<u64>> {
        self.require_local()?;
        let mut m = vec![];
        for j in 0..self.d {
            let known = self.generators.iter().filter_map(|g| g[j].order()).min();
            let mj = match known {
                Some(x) => x,
                None => {
                    let p = self.generators.iter().map(|g| g[j].precision()).max().unwrap_or(0);
                    return Err(Error::Undecidable { component: j + 1, order: p as u32 });
                }
            };
            if let Some(g) = self.generators.iter().find(|g| g[j].is_known_zero() && g[j].precision() <= mj) {
                return Err(Error::Truncation(format!(
                    "branch {}: a generator is only known to order {} while the multiplicity is {mj}",
                    j + 1,
                    g[j].precision()
                )));
            }
            m.push(mj as u64);
        }
        Ok(m)
    }

    /// An element of the maximal ideal with value equal to the fine multiplicity.
    fn minimal_element(&self, m: &[u64]) -> Result<SeriesTuple> {
        let hits = |x: &SeriesTuple| x.iter().zip(m).all(|(s, &mj)| s.order() == Some(mj as usize));
        if let Some(g) = self.generators.iter().find(|g| hits(g)) {
            return Ok(g.clone());
        }
        for b in 1..=(64 * self.generators.len() as i64 + 64) {
            let base = series::rational(b);
            let mut weight = BigRational::one();
            let mut acc: Option<SeriesTuple> = None;
            for g in &self.generators {
                weight *= &base;
                let term: SeriesTuple = g.iter().map(|s| s.scale(&weight)).collect();
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.iter().zip(&term).map(|(x, y)| x.add(y)).collect(),
                });
            }
            if let Some(x) = acc.filter(|x| hits(x)) {
                return Ok(x);
            }
        }
        Err(Error::Domain("no element of minimal value found".into()))
    }

    /// `R[m/x]` for `x` of minimal value: generated by `x` and every `g/x`.
    pub fn blowup(&self) -> Result<CurveAlgebra> {
        let m = self.fine_multiplicity()?;
        let x = self.minimal_element(&m)?;
        let mut gens = vec![x.clone()];
        for g in &self.generators {
            let q = g
                .iter()
                .zip(&x)
                .map(|(s, xs)| s.div(xs))
                .collect::<Result<SeriesTuple>>()?;
            gens.push(q);
        }
        CurveAlgebra::new(self.d, gens)
    }

    /// Values `α ≤ bound` of nonzerodivisors, lexicographically ordered.
    pub fn value_set(&self, bound: &[u64]) -> Result<Vec<Vec<u64>>> {
        self.value_set_with(bound, Execution::default())
    }

    pub fn value_set_with(&self, bound: &[u64], exec: Execution) -> Result<Vec<Vec<u64>>> {
        if bound.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: bound.len() });
        }
        values::value_vectors(&self.generators, bound, exec)
    }

    /// Multiplicity tree obtained from the sequence of blowups.
    pub fn multiplicity_tree(&self) -> Result<CurveTree> {
        self.require_local()?;
        let d = self.d;
        let mut seqs: Vec<Vec<u32>> = vec![vec![]; d];
        // owner[level][b]: smallest branch of the local factor holding b
        let mut owner: Vec<Vec<usize>> = vec![];
        let mut active: Vec<(Vec<usize>, CurveAlgebra)> = vec![((0..d).collect(), self.clone())];
        let mut finished = vec![false; d];
        let max_levels = self
            .generators
            .iter()
            .flatten()
            .map(|s| s.precision())
            .max()
            .unwrap_or(0)
            + 1;
        while !active.is_empty() {
            if owner.len() > max_levels {
                return Err(Error::Truncation("branches do not separate within the truncation".into()));
            }
            let mut row: Vec<usize> = (0..d).collect();
            let mut next = vec![];
            for (branches, alg) in active {
                let m = alg.fine_multiplicity()?;
                for (pos, &b) in branches.iter().enumerate() {
                    seqs[b].push(m[pos] as u32);
                    row[b] = branches[0];
                }
                if branches.len() == 1 && m[0] == 1 {
                    finished[branches[0]] = true;
                    continue;
                }
                for (sub, part) in alg.blowup()?.local_components()? {
                    next.push((sub.iter().map(|&i| branches[i]).collect(), part));
                }
            }
            owner.push(row);
            active = next;
        }
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&b| owner.iter().map(|row| row[b]).collect::<Vec<_>>());
        let branches = order
            .iter()
            .map(|&b| MultiplicitySequence::new(seqs[b].clone()))
            .collect::<Result<Vec<_>>>()?;
        let splits = order
            .windows(2)
            .map(|w| owner.iter().take_while(|row| row[w[0]] == row[w[1]]).count() - 1)
            .collect();
        let tree = MultiplicityTree::new(branches, splits)?;
        if let Err(v) = tree.validate() {
            return Err(Error::InvalidTree(v.to_string()));
        }
        Ok(CurveTree {
            tree,
            branch_order: order,
        })
    }

    /// Multiplicity sequence of a single branch.
    pub fn branch_multiplicity_sequence(&self) -> Result<MultiplicitySequence> {
        if self.d != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: self.d });
        }
        Ok(self.multiplicity_tree()?.tree.branches()[0].clone())
    }

    /// Value semigroup of the Arf closure, in the curve's branch order.
    pub fn arf_closure_value_semigroup(&self) -> Result<GoodSemigroup> {
        self.multiplicity_tree()?.semigroup()
    }

    /// The same curve with every series known to a different precision.
    pub fn with_truncation(&self, precision: usize) -> Self {
        CurveAlgebra {
            d: self.d,
            generators: self
                .generators
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|s| TruncatedSeries::new(s.coeffs().to_vec(), precision))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Same multiplicity tree up to a permutation of the branches.
pub fn curves_equivalent(a: &CurveAlgebra, b: &CurveAlgebra) -> Result<bool> {
    if a.d() != b.d() {
        return Ok(false);
    }
    Ok(a.multiplicity_tree()?.tree.equivalent(&b.multiplicity_tree()?.tree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(vars: &[&str], gens: &[&[&str]]) -> CurveAlgebra {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let gens: Vec<Vec<String>> = gens.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect();
        CurveAlgebra::parse(&vars, DEFAULT_TRUNCATION, &gens).unwrap()
    }

    fn seq(v: &[u32]) -> MultiplicitySequence {
        MultiplicitySequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn valuations() {
        let c = curve(&["t", "u"], &[&["t^4", "u^2"], &["1+t", "1+u"], &["t^6+t^7", "u^5"]]);
        // the unit generator loses its constant and becomes (t, u)
        assert_eq!(valuation(&c.generators()[0]).unwrap(), vec![4, 2]);
        assert_eq!(valuation(&c.generators()[1]).unwrap(), vec![1, 1]);
        assert_eq!(valuation(&c.generators()[2]).unwrap(), vec![6, 5]);
        let z = curve(&["t", "u"], &[&["0", "u"]]);
        assert_eq!(
            valuation(&z.generators()[0]),
            Err(Error::Undecidable { component: 1, order: 64 })
        );
    }

    #[test]
    fn one_branch_sequences() {
        let r = curve(&["t"], &[&["t^4"], &["t^6+t^7"]]);
        assert_eq!(r.branch_multiplicity_sequence().unwrap(), seq(&[4, 2, 2]));
        assert!(curve(&["t"], &[&["t"]]).branch_multiplicity_sequence().unwrap().is_ones());
        let mono = curve(&["t"], &[&["t^4"], &["t^6"], &["t^13"]]);
        assert_eq!(mono.branch_multiplicity_sequence().unwrap(), seq(&[4, 2, 2, 2, 2]));
    }

    #[test]
    fn one_branch_values() {
        let r = curve(&["t"], &[&["t^4"], &["t^6+t^7"]]);
        let v: Vec<u64> = r.value_set(&[20]).unwrap().into_iter().map(|x| x[0]).collect();
        assert_eq!(v, vec![0, 4, 6, 8, 10, 12, 13, 14, 16, 17, 18, 19, 20]);
        let n: Vec<u64> = curve(&["t"], &[&["t"]]).value_set(&[5]).unwrap().into_iter().map(|x| x[0]).collect();
        assert_eq!(n, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn locality() {
        let r1 = curve(&["t", "u"], &[&["t^2", "u^2"], &["0", "u"], &["t", "0"]]);
        assert!(r1.is_local_ring());
        let r2 = r1.blowup().unwrap();
        assert!(!r2.is_local_ring());
        assert_eq!(r2.local_components().unwrap().len(), 2);
        let p = curve(&["t", "u"], &[&["t", "0"], &["0", "u"], &["t", "u"]]);
        assert!(p.is_local_ring());
        let split = curve(&["t", "u"], &[&["t", "1"]]);
        assert!(!split.is_local_ring());
        assert_eq!(split.blowup(), Err(Error::NotLocal));
    }

    #[test]
    fn blowup_of_two_branch_example() {
        let r = curve(&["t", "u"], &[&["t^2", "u^2"], &["0", "u^3"], &["t^3", "0"]]);
        let r1 = r.blowup().unwrap();
        let expected = curve(&["t", "u"], &[&["t^2", "u^2"], &["0", "u"], &["t", "0"]]);
        assert_eq!(r1.value_set(&[6, 6]).unwrap(), expected.value_set(&[6, 6]).unwrap());
        let t = r.multiplicity_tree().unwrap();
        assert_eq!(t.tree.branches(), &[seq(&[2]), seq(&[2])]);
        assert_eq!(t.tree.splits(), &[1]);
    }

    #[test]
    fn three_split_trees() {
        let t1 = curve(&["t", "u"], &[&["t^4", "u^3"], &["t^6+t^7", "u^2"]]);
        let t2 = curve(&["t", "u"], &[&["t^4", "2u^2"], &["t^6+t^7", "u^3"]]);
        let t3 = curve(&["t", "u"], &[&["t^4", "u^2"], &["t^6+t^7", "u^3"]]);
        let trees: Vec<MultiplicityTree> = [&t1, &t2, &t3].iter().map(|c| c.multiplicity_tree().unwrap().tree).collect();
        assert_eq!(trees[0].splits(), &[0]);
        assert_eq!(trees[1].splits(), &[2]);
        assert_eq!(trees[2].splits(), &[3]);
        assert!(!curves_equivalent(&t1, &t3).unwrap());
        assert!(curves_equivalent(&t1, &t1).unwrap());
    }

    #[test]
    fn cusp_pair_curve() {
        let c = curve(&["t", "u"], &[&["t^2", "u^3"], &["t^3", "u^5"], &["t^4", "u^7"]]);
        let s = c.arf_closure_value_semigroup().unwrap();
        assert_eq!(s.conductor(), &[4, 6]);
        assert_eq!(s.small_elements(), vec![vec![0, 0], vec![2, 3], vec![3, 5], vec![4, 6]]);
    }
}
