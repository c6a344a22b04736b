//! The (2,3)-pebble game.
//!
//! Each vertex starts with two pebbles. An edge `uv` is accepted when four
//! pebbles can be gathered on `u` and `v` together; one of them is then used to
//! cover the edge, which is oriented away from the vertex that paid for it.
//! Pebbles are gathered by searching along the orientation for a free pebble
//! and reversing the path to it. Accepted edges form a maximum independent set
//! of the generic 2-dimensional rigidity matroid, so their number is its rank.

pub struct PebbleGame {
    pebbles: Vec<u8>,
    /// `out[v]` = heads of the accepted edges currently oriented out of `v`.
    out: Vec<Vec<usize>>,
    accepted: usize,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    /// Looks for a free pebble reachable from `root` without passing through
    /// `pinned`, and moves it to `root` by reversing the path.
    fn fetch(&mut self, root: usize, pinned: usize) -> bool {
        let n = self.pebbles.len();
        let mut from = vec![usize::MAX; n];
        from[root] = root;
        from[pinned] = pinned;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for idx in 0..self.out[u].len() {
                let w = self.out[u][idx];
                if from[w] != usize::MAX {
                    continue;
                }
                from[w] = u;
                if self.pebbles[w] > 0 {
                    self.pebbles[w] -= 1;
                    self.pebbles[root] += 1;
                    let mut head = w;
                    while head != root {
                        let tail = from[head];
                        let pos = self.out[tail]
                            .iter()
                            .position(|&h| h == head)
                            .expect("path edge is present");
                        self.out[tail].swap_remove(pos);
                        self.out[head].push(tail);
                        head = tail;
                    }
                    return true;
                }
                stack.push(w);
            }
        }
        false
    }

    /// Inserts `uv` if it is independent of the edges accepted so far.
    pub fn try_insert(&mut self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        while self.pebbles[u] + self.pebbles[v] < 4 {
            let got = (self.pebbles[u] < 2 && self.fetch(u, v))
                || (self.pebbles[v] < 2 && self.fetch(v, u));
            if !got {
                return false;
            }
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted += 1;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize, edges: &[(usize, usize)]) -> usize {
        let mut game = PebbleGame::new(n);
        for &(u, v) in edges {
            game.try_insert(u, v);
        }
        game.rank()
    }

    #[test]
    fn triangle_and_k4() {
        assert_eq!(rank(3, &[(0, 1), (1, 2), (0, 2)]), 3);
        let k4: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(rank(4, &k4), 5);
    }

    #[test]
    fn two_triangles_sharing_a_vertex_flex() {
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)];
        assert_eq!(rank(5, &edges), 6);
    }

    #[test]
    fn path_is_independent() {
        assert_eq!(rank(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]), 4);
    }
}
