//! Named graphs. Numbering conventions are part of the API:
//! paths run `0..=n`, stars and claws have centre 0, `E_{2,n}` is the path `0..=n+2`
//! with a pendant at vertex 2, and rowing graphs list the central path `v_{-2}..v_k`,
//! then the coxswain, then the cliques in order.

use super::{Sign, SignedGraph};
use crate::error::{Error, Result};

fn link(g: &mut SignedGraph, i: usize, j: usize, s: Sign) {
    g.set(i, j, s.to_i8());
}

/// Path with `n` edges on `n + 1` vertices.
pub fn path(n: usize) -> SignedGraph {
    let mut g = SignedGraph::new(n + 1);
    for i in 0..n {
        link(&mut g, i, i + 1, Sign::Pos);
    }
    g
}

/// Star with `n` leaves; vertex 0 is the centre.
pub fn star(n: usize) -> SignedGraph {
    let mut g = SignedGraph::new(n + 1);
    for i in 1..=n {
        link(&mut g, 0, i, Sign::Pos);
    }
    g
}

/// Cycle `0 − 1 − … − (n−1) − 0`; edge `i` joins `i` and `i + 1 mod n`.
pub fn cycle(signs: &[Sign]) -> Result<SignedGraph> {
    let n = signs.len();
    if n < 3 {
        return Err(Error::InvalidParams("a cycle needs at least 3 vertices".into()));
    }
    let mut g = SignedGraph::new(n);
    for (i, &s) in signs.iter().enumerate() {
        link(&mut g, i, (i + 1) % n, s);
    }
    Ok(g)
}

pub fn complete(n: usize, s: Sign) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            link(&mut g, i, j, s);
        }
    }
    g
}

/// Cocktail party graph: `K_{2a}` minus the perfect matching `{2i, 2i+1}`.
pub fn cocktail_party(a: usize) -> SignedGraph {
    let mut g = complete(2 * a, Sign::Pos);
    for i in 0..a {
        g.set(2 * i, 2 * i + 1, 0);
    }
    g
}

/// `E_{2,n}`: path `0..=n+2` plus a pendant vertex `n+3` at vertex 2 (`n + 4` vertices).
pub fn e2n(n: usize) -> SignedGraph {
    let mut g = path(n + 2);
    let v = g.add_vertex();
    link(&mut g, 2, v, Sign::Pos);
    g
}

/// `Ã_n`: the cycle on `n + 1` vertices.
pub fn a_tilde(n: usize) -> Result<SignedGraph> {
    if n < 2 {
        return Err(Error::InvalidParams("Ã_n needs n ≥ 2".into()));
    }
    cycle(&vec![Sign::Pos; n + 1])
}

/// `D̃_n`: path `0..=n−2` with extra leaves at vertices 1 and `n−3` (`n + 1` vertices).
pub fn d_tilde(n: usize) -> Result<SignedGraph> {
    if n < 4 {
        return Err(Error::InvalidParams("D̃_n needs n ≥ 4".into()));
    }
    let mut g = path(n - 2);
    let a = g.add_vertex();
    link(&mut g, 1, a, Sign::Pos);
    let b = g.add_vertex();
    link(&mut g, n - 3, b, Sign::Pos);
    Ok(g)
}

/// Path of `len` vertices plus a pendant path of `arm` vertices hung at `at`.
fn with_arm(len: usize, at: usize, arm: usize) -> SignedGraph {
    let mut g = path(len - 1);
    let mut prev = at;
    for _ in 0..arm {
        let v = g.add_vertex();
        link(&mut g, prev, v, Sign::Pos);
        prev = v;
    }
    g
}

/// `Ẽ₆`: arms of length 2 from a centre (7 vertices).
pub fn e6_tilde() -> SignedGraph {
    with_arm(5, 2, 2)
}

/// `Ẽ₇`: path of 7 vertices with a pendant at the middle (8 vertices).
pub fn e7_tilde() -> SignedGraph {
    with_arm(7, 3, 1)
}

/// `Ẽ₈`: path of 8 vertices with a pendant at vertex 2 (9 vertices); equals `E_{2,5}`.
pub fn e8_tilde() -> SignedGraph {
    with_arm(8, 2, 1)
}

/// `K_{1,3}`, centre 0.
pub fn claw() -> SignedGraph {
    star(3)
}

/// `K₄` minus the edge `1–3`; vertices 0 and 2 have degree 3.
pub fn diamond() -> SignedGraph {
    let mut g = complete(4, Sign::Pos);
    g.set(1, 3, 0);
    g
}

/// Rowing graph `R(a₁, …, a_k)`: central path `v_{-2} … v_k` (vertex `v_i` at index
/// `i + 2`), a coxswain at index `k + 3` joined to `v_0`, then for each `i` a clique of
/// size `a_i` joined to both `v_{i−1}` and `v_i`.
pub fn rowing(spec: &[usize]) -> SignedGraph {
    let k = spec.len();
    let mut g = path(k + 2);
    let cox = g.add_vertex();
    link(&mut g, 2, cox, Sign::Pos);
    for (i, &a) in spec.iter().enumerate() {
        let (left, right) = (i + 2, i + 3);
        let start = g.order();
        for _ in 0..a {
            let v = g.add_vertex();
            link(&mut g, left, v, Sign::Pos);
            link(&mut g, right, v, Sign::Pos);
            for u in start..v {
                link(&mut g, u, v, Sign::Pos);
            }
        }
    }
    g
}

/// Edgeless graph on `n` vertices.
pub fn null_graph(n: usize) -> SignedGraph {
    SignedGraph::new(n)
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "path", "star", "cycle", "complete", "neg-complete", "cocktail", "e2n", "a-tilde", "d-tilde",
    "e6-tilde", "e7-tilde", "e8-tilde", "claw", "diamond", "rowing", "null",
];

/// Dispatches on a family name with integer parameters; `cycle` takes a sign word such
/// as `+-++` instead.
pub fn by_name(name: &str, params: &[String]) -> Result<SignedGraph> {
    let ints = || -> Result<Vec<usize>> {
        params
            .iter()
            .flat_map(|p| p.split(','))
            .filter(|p| !p.is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidParams(format!("bad parameter {p:?}"))))
            .collect()
    };
    let one = || -> Result<usize> {
        match ints()?[..] {
            [n] => Ok(n),
            _ => Err(Error::InvalidParams(format!("{name} takes one integer parameter"))),
        }
    };
    let none = || -> Result<()> {
        if params.is_empty() { Ok(()) } else { Err(Error::InvalidParams(format!("{name} takes no parameters"))) }
    };
    match name {
        "path" => Ok(path(one()?)),
        "star" => Ok(star(one()?)),
        "cycle" => {
            let word = params.concat();
            let signs = word
                .chars()
                .map(|c| match c {
                    '+' => Ok(Sign::Pos),
                    '-' => Ok(Sign::Neg),
                    _ => Err(Error::InvalidParams(format!("bad sign {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            cycle(&signs)
        }
        "complete" => Ok(complete(one()?, Sign::Pos)),
        "neg-complete" => Ok(complete(one()?, Sign::Neg)),
        "cocktail" => Ok(cocktail_party(one()?)),
        "e2n" => Ok(e2n(one()?)),
        "a-tilde" => a_tilde(one()?),
        "d-tilde" => d_tilde(one()?),
        "e6-tilde" => none().map(|_| e6_tilde()),
        "e7-tilde" => none().map(|_| e7_tilde()),
        "e8-tilde" => none().map(|_| e8_tilde()),
        "claw" => none().map(|_| claw()),
        "diamond" => none().map(|_| diamond()),
        "rowing" => Ok(rowing(&ints()?)),
        "null" => Ok(null_graph(one()?)),
        _ => Err(Error::InvalidParams(format!("unknown graph {name:?}; known: {}", NAMES.join(", ")))),
    }
}
