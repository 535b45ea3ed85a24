//! Rooted isomorphism: canonical codes for trees, backtracking for small
//! general graphs.

use super::{Ball, GraphError, RootedGraph, VertexId};

/// Vertex cap for the backtracking isomorphism test on non-trees.
pub const ISO_GENERAL_LIMIT: usize = 64;

/// Canonical code of a rooted tree (AHU): every subtree maps to a
/// parenthesised string, children codes sorted. Two rooted trees are
/// isomorphic iff their codes are equal. Emitted as ASCII for golden tests.
///
/// Panics if the graph is not a tree.
pub fn canonical_tree_code(g: &RootedGraph, root: VertexId) -> String {
    assert!(g.is_tree(), "canonical_tree_code requires a tree");
    // Order vertices by decreasing BFS depth so children are coded first.
    let dist = g.distances_from(root);
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|v| std::cmp::Reverse(dist[v.index()]));
    let mut code: Vec<Option<String>> = vec![None; g.n_vertices()];
    for v in order {
        let dv = dist[v.index()].unwrap();
        let mut parts: Vec<&str> = g
            .neighbors(v)
            .iter()
            .filter(|w| dist[w.index()].unwrap() > dv)
            .map(|w| code[w.index()].as_deref().unwrap())
            .collect();
        parts.sort_unstable();
        let mut s = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(p);
        }
        s.push(')');
        code[v.index()] = Some(s);
    }
    code[root.index()].take().unwrap()
}

/// Extracts the induced subgraph on the members of a ball, rooted at its
/// center, together with the member list mapping new ids to old ones.
pub fn ball_subgraph(g: &RootedGraph, b: &Ball) -> (RootedGraph, Vec<VertexId>) {
    let members = b.members.clone();
    let mut local = vec![u32::MAX; g.n_vertices()];
    for (i, &v) in members.iter().enumerate() {
        local[v.index()] = i as u32;
    }
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); members.len()];
    for (i, &v) in members.iter().enumerate() {
        for &w in g.neighbors(v) {
            if local[w.index()] != u32::MAX {
                adj[i].push(VertexId(local[w.index()]));
            }
        }
        adj[i].sort_unstable();
    }
    let root = VertexId(local[b.center.index()]);
    (
        RootedGraph::from_adjacency_unchecked(adj, root, g.d_max()),
        members,
    )
}

/// Root-preserving isomorphism test between two balls (induced subgraphs on
/// the members, rooted at the centers).
pub fn rooted_isomorphic(
    g1: &RootedGraph,
    b1: &Ball,
    g2: &RootedGraph,
    b2: &Ball,
) -> Result<bool, GraphError> {
    let (s1, _) = ball_subgraph(g1, b1);
    let (s2, _) = ball_subgraph(g2, b2);
    rooted_subgraphs_isomorphic(&s1, &s2)
}

/// Root-preserving isomorphism of two rooted graphs.
///
/// Trees compare by canonical code; non-trees fall back to backtracking with
/// degree and BFS-level pruning, limited to [`ISO_GENERAL_LIMIT`] vertices.
pub fn rooted_subgraphs_isomorphic(
    g1: &RootedGraph,
    g2: &RootedGraph,
) -> Result<bool, GraphError> {
    if g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return Ok(false);
    }
    if g1.is_tree() != g2.is_tree() {
        return Ok(false);
    }
    if g1.is_tree() {
        return Ok(canonical_tree_code(g1, g1.root()) == canonical_tree_code(g2, g2.root()));
    }
    let n = g1.n_vertices();
    if n > ISO_GENERAL_LIMIT {
        return Err(GraphError::SizeLimit {
            got: n,
            limit: ISO_GENERAL_LIMIT,
        });
    }
    Ok(backtrack_iso(g1, g2))
}

/// Per-vertex invariant used for pruning: (BFS level from root, degree,
/// sorted neighbor degree multiset).
fn invariants(g: &RootedGraph) -> Vec<(u32, u32, Vec<u32>)> {
    let dist = g.distances_from(g.root());
    g.vertices()
        .map(|v| {
            let mut nd: Vec<u32> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (dist[v.index()].unwrap_or(u32::MAX), g.degree(v), nd)
        })
        .collect()
}

fn backtrack_iso(g1: &RootedGraph, g2: &RootedGraph) -> bool {
    let n = g1.n_vertices();
    let inv1 = invariants(g1);
    let inv2 = invariants(g2);
    if inv1[g1.root().index()] != inv2[g2.root().index()] {
        return false;
    }
    {
        let mut a = inv1.clone();
        let mut b = inv2.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    // Map g1 vertices in BFS order from the root so each new vertex has a
    // mapped neighbor, keeping the candidate set small.
    let mut order = Vec::with_capacity(n);
    {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[g1.root().index()] = true;
        queue.push_back(g1.root());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g1.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![u32::MAX; n]; // g1 -> g2
    let mut used = vec![false; n];
    map[g1.root().index()] = g2.root().0;
    used[g2.root().index()] = true;

    fn consistent(g1: &RootedGraph, g2: &RootedGraph, map: &[u32], v: VertexId, w: VertexId) -> bool {
        for &u in g1.neighbors(v) {
            let mu = map[u.index()];
            if mu != u32::MAX && !g2.has_edge(w, VertexId(mu)) {
                return false;
            }
        }
        // reverse direction: mapped neighbors of w must be neighbors of v
        for &x in g2.neighbors(w) {
            if let Some(pre) = map.iter().position(|&m| m == x.0) {
                if !g1.has_edge(v, VertexId(pre as u32)) {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        g1: &RootedGraph,
        g2: &RootedGraph,
        inv1: &[(u32, u32, Vec<u32>)],
        inv2: &[(u32, u32, Vec<u32>)],
        order: &[VertexId],
        pos: usize,
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        if map[v.index()] != u32::MAX {
            return rec(g1, g2, inv1, inv2, order, pos + 1, map, used);
        }
        // v has a previously mapped neighbor by BFS order; candidates are
        // unmatched neighbors of its image.
        let anchor = g1
            .neighbors(v)
            .iter()
            .find(|u| map[u.index()] != u32::MAX)
            .copied()
            .expect("BFS order guarantees a mapped neighbor");
        let image = VertexId(map[anchor.index()]);
        let candidates: Vec<VertexId> = g2
            .neighbors(image)
            .iter()
            .copied()
            .filter(|w| !used[w.index()] && inv2[w.index()] == inv1[v.index()])
            .collect();
        for w in candidates {
            if !consistent(g1, g2, map, v, w) {
                continue;
            }
            map[v.index()] = w.0;
            used[w.index()] = true;
            if rec(g1, g2, inv1, inv2, order, pos + 1, map, used) {
                return true;
            }
            map[v.index()] = u32::MAX;
            used[w.index()] = false;
        }
        false
    }

    rec(g1, g2, &inv1, &inv2, &order, 1, &mut map, &mut used)
}
