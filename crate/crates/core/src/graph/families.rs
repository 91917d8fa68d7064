use super::Graph;
use crate::error::{Error, Result};

fn need(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::InvalidOrder { family, min, got })
    } else {
        Ok(())
    }
}

/// Appends a chain of `len` new vertices to `g`, the first one joined to
/// `anchor`. Returns the index of the last new vertex (or `anchor` when
/// `len == 0`).
fn hang_chain(g: &mut Graph, anchor: usize, len: usize) -> Result<usize> {
    let mut prev = anchor;
    for _ in 0..len {
        let v = g.add_vertices(1);
        g.insert_edge(prev, v)?;
        prev = v;
    }
    Ok(prev)
}

/// The path `P_n` on vertices `0..n`, in order.
pub fn path(n: usize) -> Result<Graph> {
    need("path", 1, n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    need("cycle", 3, n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    need("star", 1, k)?;
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// The 5-vertex wheel `W_5`: hub 0 joined to the 4-cycle 1-2-3-4-1.
pub fn wheel5() -> Graph {
    Graph::from_edges(
        5,
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)],
    )
    .expect("wheel edges are valid")
}

/// `L_n`: the cycle `C_{n-1}` on `0..n-1` with a pendant vertex `n-1`
/// attached to vertex 0.
pub fn lollipop(n: usize) -> Result<Graph> {
    need("lollipop", 4, n)?;
    let mut g = cycle(n - 1)?;
    hang_chain(&mut g, 0, 1)?;
    Ok(g)
}

/// The double snake `DS_n`: a path `0..=n-5` with two leaves on each end.
pub fn double_snake(n: usize) -> Result<Graph> {
    need("double snake", 6, n)?;
    let last = n - 5;
    let mut g = path(last + 1)?;
    for end in [0, last] {
        hang_chain(&mut g, end, 1)?;
        hang_chain(&mut g, end, 1)?;
    }
    Ok(g)
}

/// `P_2(P_m, P_n)`: an edge `u w` where `u` also carries pendant paths of
/// orders `m` and `n`. Returns the graph and `u`, which is vertex 0; `w` is
/// vertex 1, the `m`-path occupies `2..2+m` and the `n`-path follows.
pub fn p2_two_paths(m: usize, n: usize) -> Result<(Graph, usize)> {
    let mut g = path(2)?;
    hang_chain(&mut g, 0, m)?;
    hang_chain(&mut g, 0, n)?;
    Ok((g, 0))
}

/// `G_u(P_n)`: hangs a path of `n` new vertices from `u`.
pub fn attach_pendant_path(g: &Graph, u: usize, n: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    let mut out = g.clone();
    hang_chain(&mut out, u, n)?;
    Ok(out)
}

/// `XY(x, y; n)`: disjoint union of `X` and `Y` (Y's vertices shifted by
/// `|X|`) with `xv` and `yv` joined by a path with `n` interior vertices.
/// The interior vertices come last.
pub fn join_by_path(x: &Graph, xv: usize, y: &Graph, yv: usize, n: usize) -> Result<Graph> {
    x.check_vertex(xv)?;
    y.check_vertex(yv)?;
    let shift = x.n_vertices();
    let mut g = x.clone();
    g.add_vertices(y.n_vertices());
    for (a, b) in y.edges() {
        g.insert_edge(a + shift, b + shift)?;
    }
    let end = hang_chain(&mut g, xv, n)?;
    g.insert_edge(end, yv + shift)?;
    Ok(g)
}
