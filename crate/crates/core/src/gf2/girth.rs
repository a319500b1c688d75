use std::collections::VecDeque;

use super::code::{Girth, TannerGraph};

/// Shortest cycle length of the Tanner graph.
///
/// Runs a breadth-first search from every variable node. A non-tree edge
/// `(u, v)` met while expanding `u` closes a cycle through the root of length
/// at most `dist[u] + dist[v] + 1`; the minimum over all roots is exact since
/// every cycle contains a variable node.
pub fn compute_girth(graph: &TannerGraph) -> Girth {
    let n = graph.num_vars();
    let total = n + graph.num_checks();
    let neighbors = |node: usize| -> Box<dyn Iterator<Item = usize> + '_> {
        if node < n {
            Box::new(graph.var_neighbors(node).iter().map(move |&j| n + j))
        } else {
            Box::new(graph.check_neighbors(node - n).iter().copied())
        }
    };

    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for root in 0..n {
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // Nothing found past this depth can beat the current best.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in neighbors(u) {
                if v == parent[u] {
                    continue;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    touched.push(v);
                    queue.push_back(v);
                } else {
                    best = best.min(dist[u] + dist[v] + 1);
                    if 2 * dist[u] + 1 >= best {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn girth_of<R: AsRef<[u8]>>(rows: &[R]) -> Girth {
        compute_girth(&TannerGraph::from_pcm(&BitMatrix::from_rows(rows)))
    }

    /// Oracle: a 4-cycle exists iff two columns share two rows.
    fn has_four_cycle(h: &BitMatrix) -> bool {
        (0..h.cols()).any(|a| {
            (a + 1..h.cols()).any(|b| (0..h.rows()).filter(|&r| h.get(r, a) && h.get(r, b)).count() >= 2)
        })
    }

    #[test]
    fn smallest_cycle() {
        assert_eq!(girth_of(&[[1, 1], [1, 1]]), Girth::Finite(4));
    }

    #[test]
    fn tree_is_acyclic() {
        assert_eq!(girth_of(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]), Girth::Acyclic);
        assert_eq!(girth_of(&[[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]]), Girth::Acyclic);
    }

    #[test]
    fn hamming_has_four_cycles() {
        let h = BitMatrix::from_rows(&[
            [1, 0, 1, 0, 1, 0, 1],
            [0, 1, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ]);
        assert!(has_four_cycle(&h));
        assert_eq!(compute_girth(&TannerGraph::from_pcm(&h)), Girth::Finite(4));
    }

    #[test]
    fn six_cycle() {
        // Three checks pairwise sharing one distinct variable: a hexagon.
        assert_eq!(girth_of(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]), Girth::Finite(6));
    }

    #[test]
    fn eight_cycle() {
        assert_eq!(
            girth_of(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]),
            Girth::Finite(8)
        );
    }
}
