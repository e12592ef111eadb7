//! Port-graph view of a diagram used by every mutating operation.
//!
//! Port `4 * c + s` is slot `s` of crossing `c`. Every edge joins an outgoing port to
//! an incoming port; `partner` is symmetric. Edges are identified by their incoming
//! port and carry a `key` that fixes the order of the deterministic relabeling.

use std::collections::HashMap;

use super::faces::FaceMap;
use super::{Arc, Component, Crossing, Diagram, Sign};

pub(crate) const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Wiring {
    pub signs: Vec<Sign>,
    pub alive: Vec<bool>,
    pub partner: Vec<usize>,
    /// Indexed by port; meaningful at incoming ports only.
    pub key: Vec<u64>,
    /// Keys of crossingless circles.
    pub loops: Vec<u64>,
    next_key: u64,
}

pub(crate) fn port(c: usize, s: usize) -> usize {
    4 * c + s
}

pub(crate) fn crossing_of(p: usize) -> usize {
    p / 4
}

pub(crate) fn slot_of(p: usize) -> usize {
    p % 4
}

/// The port a strand leaves through after entering at `p` (or vice versa).
pub(crate) fn through(p: usize) -> usize {
    4 * (p / 4) + (p % 4 + 2) % 4
}

/// An edge of the wiring, or a crossingless circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum EdgeRef {
    Edge { head: usize },
    Loop { index: usize },
}

impl Wiring {
    pub fn empty() -> Self {
        Wiring { signs: Vec::new(), alive: Vec::new(), partner: Vec::new(), key: Vec::new(), loops: Vec::new(), next_key: 1 }
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let mut w = Wiring::empty();
        let mut heads: HashMap<Arc, usize> = HashMap::new();
        let mut tails: HashMap<Arc, usize> = HashMap::new();
        for (ci, c) in d.crossings().iter().enumerate() {
            w.signs.push(c.sign);
            w.alive.push(true);
            for s in 0..4 {
                w.partner.push(NONE);
                w.key.push(0);
                if c.is_incoming_slot(s) {
                    heads.insert(c.slots[s], port(ci, s));
                } else {
                    tails.insert(c.slots[s], port(ci, s));
                }
            }
        }
        for (a, &h) in &heads {
            if let Some(&t) = tails.get(a) {
                w.partner[h] = t;
                w.partner[t] = h;
                w.key[h] = u64::from(*a);
            }
        }
        for a in d.free_loops() {
            w.loops.push(u64::from(a));
        }
        w.next_key = u64::from(d.arc_count()) + 1;
        w
    }

    pub fn fresh_key(&mut self) -> u64 {
        let k = self.next_key;
        self.next_key += 1;
        k
    }

    pub fn add_crossing(&mut self, sign: Sign) -> usize {
        let c = self.signs.len();
        self.signs.push(sign);
        self.alive.push(true);
        for _ in 0..4 {
            self.partner.push(NONE);
            self.key.push(0);
        }
        c
    }

    pub fn over_in_slot(&self, c: usize) -> usize {
        match self.signs[c] {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn is_in(&self, p: usize) -> bool {
        let s = slot_of(p);
        s == 0 || s == self.over_in_slot(crossing_of(p))
    }

    pub fn is_over(&self, p: usize) -> bool {
        slot_of(p) % 2 == 1
    }

    /// Joins an outgoing port to an incoming port.
    pub fn connect(&mut self, out_port: usize, in_port: usize, key: u64) {
        debug_assert!(!self.is_in(out_port) && self.is_in(in_port), "connect({out_port}, {in_port}) has wrong directions");
        self.partner[out_port] = in_port;
        self.partner[in_port] = out_port;
        self.key[in_port] = key;
    }

    pub fn alive_crossings(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.signs.len()).filter(|&c| self.alive[c])
    }

    pub fn alive_in_ports(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive_crossings().flat_map(move |c| (0..4).map(move |s| port(c, s))).filter(|&p| self.is_in(p))
    }

    /// Routes a strand through an edge: the edge's source now feeds `entry` and
    /// `exit` feeds the edge's target. On a circle, `exit` feeds `entry`.
    pub fn route_through(&mut self, edge: EdgeRef, entry: usize, exit: usize) {
        match edge {
            EdgeRef::Edge { head } => {
                let tail = self.partner[head];
                let key = self.key[head];
                self.connect(tail, entry, key);
                let k2 = self.fresh_key();
                self.connect(exit, head, k2);
            }
            EdgeRef::Loop { index } => {
                let key = self.loops[index];
                self.connect(exit, entry, key);
                self.loops[index] = u64::MAX;
            }
        }
    }

    pub fn drop_dead_loops(&mut self) {
        self.loops.retain(|&k| k != u64::MAX);
    }

    /// Removes the passage `in_p -> out_p` of a crossing, joining what fed `in_p` to
    /// what `out_p` fed. A passage whose output runs straight back into it becomes a circle.
    pub fn remove_passage(&mut self, in_p: usize, out_p: usize) {
        let a = self.partner[in_p];
        let b = self.partner[out_p];
        if a == out_p {
            self.loops.push(self.key[in_p]);
        } else {
            let key = self.key[in_p].min(self.key[b]);
            self.partner[a] = b;
            self.partner[b] = a;
            self.key[b] = key;
        }
        self.partner[in_p] = NONE;
        self.partner[out_p] = NONE;
    }

    pub fn remove_crossing(&mut self, c: usize) {
        let over_in = port(c, self.over_in_slot(c));
        self.remove_passage(port(c, 0), port(c, 2));
        self.remove_passage(over_in, through(over_in));
        self.alive[c] = false;
    }

    pub fn faces(&self) -> FaceMap {
        FaceMap::build(self)
    }

    /// Connected pieces of the 4-valent graph, as lists of crossings.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.signs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let nx = parent[y];
                parent[y] = r;
                y = nx;
            }
            r
        }
        for c in self.alive_crossings() {
            for s in 0..4 {
                let q = self.partner[port(c, s)];
                if q != NONE {
                    let (ra, rb) = (find(&mut parent, c), find(&mut parent, crossing_of(q)));
                    parent[ra] = rb;
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut order = Vec::new();
        for c in self.alive_crossings() {
            let r = find(&mut parent, c);
            let g = groups.entry(r).or_default();
            if g.is_empty() {
                order.push(r);
            }
            g.push(c);
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    pub fn is_planar(&self) -> bool {
        let faces = self.faces();
        let pieces = self.pieces();
        let mut piece_of = vec![usize::MAX; self.signs.len()];
        for (i, p) in pieces.iter().enumerate() {
            for &c in p {
                piece_of[c] = i;
            }
        }
        let mut face_counts = vec![0usize; pieces.len()];
        for f in &faces.faces {
            if let Some(&p) = f.first() {
                face_counts[piece_of[crossing_of(p)]] += 1;
            }
        }
        pieces.iter().zip(&face_counts).all(|(p, &f)| f == p.len() + 2)
    }

    /// Labels components by walking from the smallest-keyed edge; crossings keep their
    /// relative order. Returns the diagram and the label of every incoming port.
    pub fn to_diagram_with_labels(&self) -> (Diagram, HashMap<usize, Arc>) {
        enum Start {
            Edge(usize),
            Loop,
        }
        let mut starts: Vec<(u64, Start)> = Vec::new();
        let mut seen = vec![false; self.partner.len()];
        // smallest key of every closed strand
        for h in self.alive_in_ports() {
            if seen[h] {
                continue;
            }
            let mut best = (self.key[h], h);
            let mut p = h;
            loop {
                seen[p] = true;
                best = best.min((self.key[p], p));
                p = self.partner[through(p)];
                if p == h {
                    break;
                }
            }
            starts.push((best.0, Start::Edge(best.1)));
        }
        for &k in self.loops.iter().filter(|&&k| k != u64::MAX) {
            starts.push((k, Start::Loop));
        }
        starts.sort_by_key(|s| s.0);

        let mut label: HashMap<usize, Arc> = HashMap::new();
        let mut components = Vec::new();
        let mut next: Arc = 1;
        for (_, start) in &starts {
            let first = next;
            match *start {
                Start::Loop => next += 1,
                Start::Edge(h) => {
                    let mut p = h;
                    loop {
                        label.insert(p, next);
                        next += 1;
                        p = self.partner[through(p)];
                        if p == h {
                            break;
                        }
                    }
                }
            }
            components.push(Component { first, len: next - first });
        }
        let crossings = self
            .alive_crossings()
            .map(|c| {
                let mut slots = [0; 4];
                for (s, slot) in slots.iter_mut().enumerate() {
                    let p = port(c, s);
                    let h = if self.is_in(p) { p } else { self.partner[p] };
                    *slot = label[&h];
                }
                Crossing { slots, sign: self.signs[c] }
            })
            .collect();
        (Diagram::from_parts(crossings, components), label)
    }

    pub fn to_diagram(&self) -> Diagram {
        self.to_diagram_with_labels().0
    }

    /// Canonical form: each connected piece is labeled by the lexicographically least
    /// traversal over all starting edges, pieces are sorted, circles come last.
    pub fn canonical_diagram(&self) -> Diagram {
        let mut encodings: Vec<(Vec<u32>, Vec<Crossing>)> = self
            .pieces()
            .into_iter()
            .map(|piece| {
                let starts: Vec<usize> = piece
                    .iter()
                    .flat_map(|&c| (0..4).map(move |s| port(c, s)))
                    .filter(|&p| self.is_in(p))
                    .collect();
                starts.iter().map(|&h| self.encode_piece_from(h, piece.len())).min().unwrap()
            })
            .collect();
        encodings.sort();
        let mut crossings = Vec::new();
        let mut components = Vec::new();
        let mut offset = 0;
        for (lens, xs) in encodings {
            let base = offset;
            for len in &lens {
                components.push(Component { first: offset + 1, len: *len });
                offset += len;
            }
            crossings.extend(xs.into_iter().map(|mut x| {
                for s in x.slots.iter_mut() {
                    *s += base;
                }
                x
            }));
        }
        for _ in self.loops.iter().filter(|&&k| k != u64::MAX) {
            components.push(Component { first: offset + 1, len: 1 });
            offset += 1;
        }
        Diagram::from_parts(crossings, components)
    }

    /// Labels one connected piece starting at edge `start`; further components are
    /// entered where the labeled arcs first meet them.
    fn encode_piece_from(&self, start: usize, piece_size: usize) -> (Vec<u32>, Vec<Crossing>) {
        let mut label: HashMap<usize, Arc> = HashMap::with_capacity(piece_size * 2);
        let mut order: Vec<usize> = Vec::with_capacity(piece_size * 2);
        let mut lens = Vec::new();
        let walk = |h: usize, label: &mut HashMap<usize, Arc>, order: &mut Vec<usize>| {
            let before = order.len();
            let mut p = h;
            loop {
                label.insert(p, order.len() as Arc + 1);
                order.push(p);
                p = self.partner[through(p)];
                if p == h {
                    break;
                }
            }
            (order.len() - before) as u32
        };
        lens.push(walk(start, &mut label, &mut order));
        let mut i = 0;
        while i < order.len() {
            let h = order[i];
            let c = crossing_of(h);
            let other_in = if slot_of(h) == 0 { port(c, self.over_in_slot(c)) } else { port(c, 0) };
            if !label.contains_key(&other_in) {
                lens.push(walk(other_in, &mut label, &mut order));
            }
            i += 1;
        }
        let mut crossings: Vec<Crossing> = Vec::with_capacity(piece_size);
        let mut done = std::collections::HashSet::with_capacity(piece_size);
        for &h in &order {
            let c = crossing_of(h);
            if !done.insert(c) {
                continue;
            }
            let mut slots = [0; 4];
            for (s, slot) in slots.iter_mut().enumerate() {
                let p = port(c, s);
                let hh = if self.is_in(p) { p } else { self.partner[p] };
                *slot = label[&hh];
            }
            crossings.push(Crossing { slots, sign: self.signs[c] });
        }
        crossings.sort();
        (lens, crossings)
    }
}
