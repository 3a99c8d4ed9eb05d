//! Plain adjacency-list digraph on vertices `0..n`.

/// Out-lists keep their insertion order; in-lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_out_lists(out: Vec<Vec<usize>>) -> Digraph {
        let n = out.len();
        let mut inn = vec![Vec::new(); n];
        for (u, targets) in out.iter().enumerate() {
            for &v in targets {
                assert!(v < n, "arc {u} -> {v} leaves the vertex range");
                inn[v].push(u);
            }
        }
        for l in &mut inn {
            l.sort_unstable();
        }
        Digraph { out, inn }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            out[u].push(v);
        }
        Digraph::from_out_lists(out)
    }

    /// Symmetric digraph of an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Digraph {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in edges {
            out[u].push(v);
            out[v].push(u);
        }
        for l in &mut out {
            l.sort_unstable();
        }
        Digraph::from_out_lists(out)
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_lists(&self) -> &[Vec<usize>] {
        &self.out
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v)
    }

    /// Arcs in out-list order: `(from, slot, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().enumerate().map(move |(k, &v)| (u, k, v)))
    }

    /// Copy with the `slot`-th arc out of `from` redirected to `to`.
    pub fn retarget_arc(&self, from: usize, slot: usize, to: usize) -> Digraph {
        let mut out = self.out.clone();
        out[from][slot] = to;
        Digraph::from_out_lists(out)
    }

    pub fn with_arc_added(&self, from: usize, to: usize) -> Digraph {
        let mut out = self.out.clone();
        out[from].push(to);
        Digraph::from_out_lists(out)
    }

    pub fn without_out_arcs(&self, v: usize) -> Digraph {
        let mut out = self.out.clone();
        out[v].clear();
        Digraph::from_out_lists(out)
    }

    /// Copy with vertex `v` renamed `map[v]`; out-list order is kept.
    pub fn relabeled(&self, map: &[usize]) -> Digraph {
        assert_eq!(map.len(), self.n());
        let mut out = vec![Vec::new(); self.n()];
        for (v, l) in self.out.iter().enumerate() {
            out[map[v]] = l.iter().map(|&w| map[w]).collect();
        }
        Digraph::from_out_lists(out)
    }

    /// Induced subdigraph on `keep`, relabelled by position in `keep`.
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &v) in keep.iter().enumerate() {
            pos[v] = k;
        }
        let out = keep
            .iter()
            .map(|&v| {
                self.out[v]
                    .iter()
                    .filter(|&&w| pos[w] != usize::MAX)
                    .map(|&w| pos[w])
                    .collect()
            })
            .collect();
        Digraph::from_out_lists(out)
    }

    /// Strong components by Tarjan's algorithm, iterative.
    /// Components come out in reverse topological order.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut next = 0;
        // (vertex, next out-edge position)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            while let Some(top) = call.last_mut() {
                let (v, pos) = *top;
                if pos == 0 && index[v] == UNSEEN {
                    index[v] = next;
                    low[v] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if let Some(&w) = self.out[v].get(pos) {
                    top.1 += 1;
                    if index[w] == UNSEEN {
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n() > 0 && self.strong_components().len() == 1
    }

    /// Dense boolean adjacency matrix.
    pub fn bool_matrix(&self) -> BoolMatrix {
        let mut m = BoolMatrix::zeros(self.n());
        for (u, _, v) in self.arcs() {
            m.set(u, v);
        }
        m
    }
}

/// Square boolean matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolMatrix {
    n: usize,
    cells: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> BoolMatrix {
        BoolMatrix {
            n,
            cells: vec![false; n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.cells[i * self.n + j] = true;
    }

    /// Boolean product: `(A·B)[i][j] = OR_k A[i][k] AND B[k][j]`.
    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut r = BoolMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for j in 0..n {
                        if other.get(k, j) {
                            r.cells[i * n + j] = true;
                        }
                    }
                }
            }
        }
        r
    }

    /// Indices `i` with `M[i][i]` set.
    pub fn diagonal_support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i, i)).collect()
    }
}
