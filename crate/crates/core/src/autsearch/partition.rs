use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::Hasher;

use crate::graph::Graph;

/// An ordered partition of the vertex set stored as one array: cell `c`
/// occupies positions `c..end(c)` of `order`, and cells are named by their
/// start position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPartition {
    order: Vec<usize>,
    pos: Vec<usize>,
    /// start of the cell holding each vertex
    cell_of: Vec<usize>,
    /// `end[c]` is the exclusive end of cell `c`; only meaningful at starts
    end: Vec<usize>,
    cells: usize,
}

impl ColoredPartition {
    /// The partition of `g` into color classes, ordered by color value.
    pub fn by_colors(g: &Graph) -> ColoredPartition {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (g.color(v), v));
        let mut part = ColoredPartition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            end: vec![0; n],
            order,
            cells: 0,
        };
        let mut i = 0;
        while i < n {
            let c = g.color(part.order[i]);
            let mut j = i;
            while j < n && g.color(part.order[j]) == c {
                j += 1;
            }
            part.set_cell(i, j);
            i = j;
        }
        part
    }

    fn set_cell(&mut self, start: usize, end: usize) {
        for p in start..end {
            let v = self.order[p];
            self.pos[v] = p;
            self.cell_of[v] = start;
        }
        self.end[start] = end;
        self.cells += 1;
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut i = 0;
        while i < self.order.len() {
            out.push(i);
            i = self.end[i];
        }
        out
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.order[start..self.end[start]]
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts()
            .into_iter()
            .map(|s| self.cell(s).to_vec())
            .collect()
    }

    /// First smallest cell with more than one vertex, as `(start, end)`.
    pub fn target_cell(&self) -> Option<(usize, usize)> {
        self.cell_starts()
            .into_iter()
            .map(|s| (s, self.end[s]))
            .filter(|(s, e)| e - s > 1)
            .min_by_key(|(s, e)| (e - s, *s))
    }

    /// Splits `v` off the front of its cell. Returns the start of the new
    /// singleton.
    pub fn individualize(&mut self, v: usize) -> usize {
        let start = self.cell_of[v];
        let end = self.end[start];
        if end - start == 1 {
            return start;
        }
        let p = self.pos[v];
        let w = self.order[start];
        self.order.swap(start, p);
        self.pos[w] = p;
        self.pos[v] = start;
        self.end[start] = start + 1;
        self.set_cell(start + 1, end);
        start
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the splitter cells in `queue`. Every split is fed to
    /// `trace` in a labeling-independent way.
    pub fn refine(&mut self, g: &Graph, initial: &[usize], trace: &mut DefaultHasher) {
        let n = self.order.len();
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &c in initial {
            if !in_queue[c] {
                in_queue[c] = true;
                queue.push_back(c);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched: Vec<usize> = Vec::new();
        while let Some(splitter) = queue.pop_front() {
            in_queue[splitter] = false;
            if self.is_discrete() {
                break;
            }
            let members: Vec<usize> = self.cell(splitter).to_vec();
            let passes: &[bool] = if g.is_directed() { &[true, false] } else { &[true] };
            for &out_pass in passes {
                for &w in &members {
                    // count, for every x, the neighbors of x inside the splitter
                    let sources = if out_pass { g.in_neighbors(w) } else { g.neighbors(w) };
                    for &x in sources {
                        if count[x] == 0 {
                            touched.push(x);
                        }
                        count[x] += 1;
                    }
                }
                let mut cells: Vec<usize> = touched.iter().map(|&x| self.cell_of[x]).collect();
                cells.sort_unstable();
                cells.dedup();
                trace.write_usize(splitter);
                trace.write_usize(touched.len());
                for c in cells {
                    self.split(c, &count, &mut in_queue, &mut queue, trace);
                }
                for &x in &touched {
                    count[x] = 0;
                }
                touched.clear();
            }
        }
        trace.write_usize(self.cells);
    }

    fn split(
        &mut self,
        start: usize,
        count: &[u32],
        in_queue: &mut [bool],
        queue: &mut VecDeque<usize>,
        trace: &mut DefaultHasher,
    ) {
        let end = self.end[start];
        if end - start == 1 {
            return;
        }
        let first = count[self.order[start]];
        if self.order[start..end].iter().all(|&v| count[v] == first) {
            return;
        }
        self.order[start..end].sort_unstable_by_key(|&v| (count[v], v));
        let mut fragments: Vec<(usize, usize)> = Vec::new();
        let mut i = start;
        while i < end {
            let c = count[self.order[i]];
            let mut j = i;
            while j < end && count[self.order[j]] == c {
                j += 1;
            }
            trace.write_usize(i);
            trace.write_u32(c);
            trace.write_usize(j - i);
            fragments.push((i, j));
            i = j;
        }
        self.cells -= 1;
        for &(s, e) in &fragments {
            self.set_cell(s, e);
        }
        if in_queue[start] {
            for &(s, _) in &fragments[1..] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        } else {
            let largest = fragments
                .iter()
                .enumerate()
                .max_by_key(|(k, (s, e))| (e - s, std::cmp::Reverse(*k)))
                .map(|(k, _)| k)
                .expect("at least two fragments");
            for (k, &(s, _)) in fragments.iter().enumerate() {
                if k != largest {
                    in_queue[s] = true;
                    queue.push_back(s);
                }
            }
        }
    }
}
