//! Permutations of `{1, ..., n}` and generator sets for the subgroups acting
//! on the complete splitting algebra.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored 0-based: `images[i] = σ(i + 1) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images `σ(1), ..., σ(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation {
                    n,
                    perm: images.to_vec(),
                });
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// The transposition `(i j)` on `{1..n}`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// The cycle `(c_1 c_2 ... c_k)`, 1-based: `c_1 ↦ c_2 ↦ ... ↦ c_k ↦ c_1`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (k, &c) in cycle.iter().enumerate() {
            p.images[c - 1] = cycle[(k + 1) % cycle.len()] - 1;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based images.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// All permutations of `{1..n}` in lexicographic order of their image tuples.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = (0..n).collect::<Vec<_>>();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn all_even(n: usize) -> Vec<Permutation> {
        Self::all(n).into_iter().filter(|p| p.is_even()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// A subgroup of `S_n` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub n: usize,
    pub name: String,
    pub generators: Vec<Permutation>,
}

impl SubgroupSpec {
    pub fn new(n: usize, name: impl Into<String>, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::NotAPermutation {
                n,
                perm: g.images_one_based(),
            });
        }
        Ok(SubgroupSpec {
            n,
            name: name.into(),
            generators,
        })
    }

    /// The full symmetric group, generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> Self {
        Self::fixing_first(n, 0)
    }

    /// `S'_{n-r}`: permutations fixing `1..r`, generated by `(i, i+1)` for `r < i < n`.
    pub fn fixing_first(n: usize, r: usize) -> Self {
        let generators = (r + 1..n)
            .map(|i| Permutation::transposition(n, i, i + 1))
            .collect();
        SubgroupSpec {
            n,
            name: if r == 0 {
                "sym".to_string()
            } else {
                format!("sym-prime:{r}")
            },
            generators,
        }
    }

    /// `S_r ⊆ S_n` permuting `1..r`, generated by `(i, i+1)` for `1 <= i < r`.
    pub fn permuting_first(n: usize, r: usize) -> Self {
        let generators = (1..r.min(n))
            .map(|i| Permutation::transposition(n, i, i + 1))
            .collect();
        SubgroupSpec {
            n,
            name: format!("sym-first:{r}"),
            generators,
        }
    }

    /// The alternating group, generated by the 3-cycles `(1 2 i)`, `3 <= i <= n`.
    pub fn alternating(n: usize) -> Self {
        let generators = (3..=n).map(|i| Permutation::cycle(n, &[1, 2, i])).collect();
        SubgroupSpec {
            n,
            name: "alt".to_string(),
            generators,
        }
    }

    /// Parses `sym`, `alt`, `sym-prime:<r>` or `sym-first:<r>` for degree `n`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let level = |t: &str| -> Result<usize> {
            let r: usize = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad subgroup level `{t}`")))?;
            if r > n {
                return Err(Error::LevelOutOfRange { level: r, n });
            }
            Ok(r)
        };
        match s {
            "sym" => Ok(Self::symmetric(n)),
            "alt" => Ok(Self::alternating(n)),
            _ => {
                if let Some(r) = s.strip_prefix("sym-prime:") {
                    Ok(Self::fixing_first(n, level(r)?))
                } else if let Some(r) = s.strip_prefix("sym-first:") {
                    Ok(Self::permuting_first(n, level(r)?))
                } else {
                    Err(Error::Parse(format!(
                        "unknown subgroup `{s}` (expected sym, alt, sym-prime:<r>, sym-first:<r>)"
                    )))
                }
            }
        }
    }

    /// Closure of the generators, by breadth-first multiplication.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut seen = std::collections::BTreeSet::new();
        let id = Permutation::identity(self.n);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &self.generators {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let a = Permutation::from_images(&[2, 3, 1]).unwrap();
        let b = Permutation::transposition(3, 1, 2);
        // (a ∘ b)(1) = a(2) = 3
        assert_eq!(a.compose(&b).images_one_based(), vec![3, 2, 1]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.sign(), 1);
        assert_eq!(b.sign(), -1);
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all_even(5).len(), 60);
        let all = Permutation::all(3);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn subgroup_orders() {
        assert_eq!(SubgroupSpec::symmetric(4).elements().len(), 24);
        assert_eq!(SubgroupSpec::alternating(4).elements().len(), 12);
        assert_eq!(SubgroupSpec::alternating(5).elements().len(), 60);
        assert_eq!(SubgroupSpec::fixing_first(5, 2).elements().len(), 6);
        assert_eq!(SubgroupSpec::permuting_first(5, 3).elements().len(), 6);
        assert_eq!(SubgroupSpec::fixing_first(4, 3).elements().len(), 1);
        for p in SubgroupSpec::fixing_first(5, 2).elements() {
            assert_eq!(p.apply(0), 0);
            assert_eq!(p.apply(1), 1);
        }
    }

    #[test]
    fn parse_selectors() {
        assert_eq!(SubgroupSpec::parse(4, "sym").unwrap().generators.len(), 3);
        assert_eq!(SubgroupSpec::parse(4, "alt").unwrap().generators.len(), 2);
        assert_eq!(SubgroupSpec::parse(4, "sym-prime:2").unwrap().generators.len(), 1);
        assert_eq!(SubgroupSpec::parse(4, "sym-first:3").unwrap().generators.len(), 2);
        assert!(SubgroupSpec::parse(4, "sym-prime:9").is_err());
        assert!(SubgroupSpec::parse(4, "cyc").is_err());
    }
}
