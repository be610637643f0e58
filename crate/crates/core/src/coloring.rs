//! Exact colouring with equality and inequality constraints, by DSATUR-ordered
//! backtracking with symmetry breaking on colour indices.

use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Items merged by equality constraints, with the conflict graph between classes.
pub struct Quotient {
    /// class index of every item
    pub class_of: Vec<usize>,
    /// adjacency lists of the conflict graph on classes
    pub conflicts: Vec<Vec<usize>>,
}

/// Merges `same` pairs; returns the offending `diff` pair if one lies inside a class.
pub fn quotient(n: usize, same: &[(usize, usize)], diff: &[(usize, usize)]) -> std::result::Result<Quotient, (usize, usize)> {
    let mut uf = UnionFind::new(n);
    for &(a, b) in same {
        uf.union(a, b);
    }
    let roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let mut ids = vec![usize::MAX; n];
    let mut k = 0;
    for &r in &roots {
        if ids[r] == usize::MAX {
            ids[r] = k;
            k += 1;
        }
    }
    let class_of: Vec<usize> = roots.iter().map(|&r| ids[r]).collect();
    let mut conflicts = vec![Vec::new(); k];
    for &(a, b) in diff {
        let (ca, cb) = (class_of[a], class_of[b]);
        if ca == cb {
            return Err((a, b));
        }
        if !conflicts[ca].contains(&cb) {
            conflicts[ca].push(cb);
            conflicts[cb].push(ca);
        }
    }
    Ok(Quotient { class_of, conflicts })
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    colors: Vec<usize>,
    k: usize,
    nodes: u64,
    budget: u64,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        // DSATUR: most distinct neighbour colours, then highest degree, then lowest index
        (0..self.adj.len())
            .filter(|&v| self.colors[v] == UNSET)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = self.adj[v].iter().map(|&w| self.colors[w]).filter(|&c| c != UNSET).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), self.adj[v].len(), usize::MAX - v)
            })
    }

    fn run(&mut self, used: usize) -> Result<bool> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("colouring search", self.budget));
        }
        for c in 0..self.k.min(used + 1) {
            if self.adj[v].iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            if self.run(used.max(c + 1))? {
                return Ok(true);
            }
            self.colors[v] = UNSET;
        }
        Ok(false)
    }
}

/// A proper colouring of the graph `adj` with at most `k` colours, if one exists.
pub fn k_coloring(adj: &[Vec<usize>], k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if adj.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search { adj, colors: vec![UNSET; adj.len()], k, nodes: 0, budget };
    Ok(if s.run(0)? { Some(s.colors) } else { None })
}

/// Chromatic number and an optimal colouring.
pub fn chromatic_number(adj: &[Vec<usize>], budget: u64) -> Result<(usize, Vec<usize>)> {
    if adj.is_empty() {
        return Ok((0, Vec::new()));
    }
    let lower = greedy_clique(adj);
    for k in lower.max(1)..=adj.len() {
        if let Some(c) = k_coloring(adj, k, budget)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colours always suffice")
}

fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let mut best = 1;
    for s in 0..adj.len() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = adj[s].clone();
        cand.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        for v in cand {
            if clique.iter().all(|&u| adj[v].contains(&u)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    #[test]
    fn cycles() {
        assert_eq!(chromatic_number(&cycle(5), 1000).unwrap().0, 3);
        assert_eq!(chromatic_number(&cycle(6), 1000).unwrap().0, 2);
        assert!(k_coloring(&cycle(5), 2, 1000).unwrap().is_none());
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let mut adj = vec![Vec::new(); 10];
        let mut e = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for i in 0..5 {
            e(i, (i + 1) % 5);
            e(i, i + 5);
            e(i + 5, (i + 2) % 5 + 5);
        }
        let (k, c) = chromatic_number(&adj, 100_000).unwrap();
        assert_eq!(k, 3);
        for v in 0..10 {
            assert!(adj[v].iter().all(|&w| c[w] != c[v]));
        }
    }

    #[test]
    fn quotient_detects_contradiction() {
        assert_eq!(quotient(3, &[(0, 1), (1, 2)], &[(0, 2)]).err(), Some((0, 2)));
        let q = quotient(4, &[(0, 1)], &[(1, 2), (0, 3)]).unwrap();
        assert_eq!(q.class_of[0], q.class_of[1]);
        assert_eq!(q.conflicts.len(), 3);
    }

    #[test]
    fn budget() {
        let k: Vec<Vec<usize>> = (0..12).map(|i| (0..12).filter(|&j| j != i).collect()).collect();
        assert!(matches!(k_coloring(&k, 11, 5), Err(Error::BudgetExceeded { .. })));
    }
}
