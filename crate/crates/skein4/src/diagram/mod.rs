//! Link diagrams as combinatorial crossing lists.
//!
//! A diagram is a set of numbered arcs, a list of crossings, and a count of
//! crossing-free loops.  Each crossing stores its four incident arc ends in
//! counterclockwise order starting from the incoming under-strand arc, plus
//! the slot (1 or 3) at which the over-strand enters.  Arcs are numbered
//! 0-based and consecutively along each component in the direction of
//! traversal, so arc numbering doubles as the orientation.

pub mod braid;
pub mod canonical;
pub mod moves;
pub mod parse;
pub mod random;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors produced while building, parsing, or rewriting diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// Input text or record list violates the format.
    Malformed(String),
    /// Arc directions cannot be resolved consistently.
    Orientation(String),
    /// A requested move site does not match its pattern.
    NoSuchMove(String),
    /// An index is out of range.
    BadIndex(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Malformed(m) => write!(f, "malformed diagram: {m}"),
            DiagramError::Orientation(m) => write!(f, "orientation conflict: {m}"),
            DiagramError::NoSuchMove(m) => write!(f, "no such move: {m}"),
            DiagramError::BadIndex(m) => write!(f, "bad index: {m}"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// One crossing: four arc ends, counterclockwise.  `ends[0]` is the incoming
/// under-strand arc and `ends[2]` the outgoing under-strand arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub ends: [usize; 4],
}

/// Whether a textual crossing record fixes the under-in slot exactly or up to
/// rotation by two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    /// `C` record: under-in may be written at slot 0 or slot 2.
    C,
    /// `X` record: under-in must be written at slot 0.
    X,
}

/// An immutable link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// Slot (1 or 3) at which the over strand enters, per crossing.
    over_in: Vec<u8>,
    arc_count: usize,
    free_loops: usize,
    comp_of_arc: Vec<usize>,
    /// (first arc, arc count) per crossing-carrying component, ordered by
    /// first arc.
    comp_blocks: Vec<(usize, usize)>,
}

/// A traversal context: the component visit order, a base arc per component,
/// and a direction flag per component (`true` follows arc numbering).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalContext {
    pub order: Vec<usize>,
    pub base: Vec<usize>,
    pub dir: Vec<bool>,
}

impl TraversalContext {
    /// The canonical context: components in block order, base at each block
    /// start, all directions forward.
    pub fn canonical(d: &LinkDiagram) -> TraversalContext {
        TraversalContext {
            order: (0..d.comp_blocks.len()).collect(),
            base: d.comp_blocks.iter().map(|&(s, _)| s).collect(),
            dir: vec![true; d.comp_blocks.len()],
        }
    }
}

/// Per-crossing classification under a traversal context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingStatus {
    /// First reached along the over strand.
    pub bad: bool,
    /// The two strands belong to different components.
    pub inter: bool,
    /// Crossing sign under the context's orientations.
    pub sign: i8,
}

/// Result of classifying every crossing under a traversal context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingReport {
    pub crossings: Vec<CrossingStatus>,
    /// Earliest bad crossing in visit order, if any.
    pub first_bad: Option<usize>,
    pub bad_count: usize,
    pub writhe: i64,
}

/// Which pair of opposite regions a smoothing joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    /// Joins ends (0,1) and (2,3).
    I,
    /// Joins ends (0,3) and (1,2).
    II,
}

impl LinkDiagram {
    /// Builds a diagram from raw records, resolving arc directions.
    ///
    /// Records list four 0-based arc ends counterclockwise.  The under strand
    /// runs from `ends[0]` to `ends[2]`; for `RecordKind::C` the pair may be
    /// written in either rotation, for `RecordKind::X` it is taken literally.
    pub fn from_parts(
        records: &[([usize; 4], RecordKind)],
        free_loops: usize,
    ) -> Result<LinkDiagram, DiagramError> {
        if records.is_empty() {
            if free_loops == 0 {
                return Err(DiagramError::Malformed("empty diagram".into()));
            }
            return Ok(LinkDiagram {
                crossings: Vec::new(),
                over_in: Vec::new(),
                arc_count: 0,
                free_loops,
                comp_of_arc: Vec::new(),
                comp_blocks: Vec::new(),
            });
        }

        // Every arc id in 0..max+1 must occur exactly twice.
        let arc_count = records
            .iter()
            .flat_map(|(e, _)| e.iter())
            .max()
            .map(|&m| m + 1)
            .unwrap_or(0);
        let mut positions: Vec<Vec<(usize, u8)>> = vec![Vec::new(); arc_count];
        for (x, (ends, _)) in records.iter().enumerate() {
            for (s, &a) in ends.iter().enumerate() {
                positions[a].push((x, s as u8));
            }
        }
        for (a, p) in positions.iter().enumerate() {
            if p.len() != 2 {
                return Err(DiagramError::Malformed(format!(
                    "arc {} occurs {} times, expected 2",
                    a + 1,
                    p.len()
                )));
            }
        }

        // Undirected circle walk: slot s continues through the strand to
        // slot (s+2)%4.
        let mut visited = vec![false; arc_count];
        let mut circles: Vec<Vec<usize>> = Vec::new();
        for a0 in 0..arc_count {
            if visited[a0] {
                continue;
            }
            let mut circle = Vec::new();
            let mut cur = a0;
            let mut exit = positions[a0][1];
            loop {
                visited[cur] = true;
                circle.push(cur);
                let (x, s) = exit;
                let partner = ((s + 2) % 4) as usize;
                let nxt = records[x].0[partner];
                let entered = (x, (s + 2) % 4);
                let idx = if positions[nxt][0] == entered { 0 } else { 1 };
                cur = nxt;
                exit = positions[nxt][1 - idx];
                if cur == a0 {
                    break;
                }
            }
            circles.push(circle);
        }

        // Each circle must occupy a contiguous arc block, cyclically
        // ascending or descending.
        for circle in &circles {
            let lo = *circle.iter().min().unwrap();
            let hi = *circle.iter().max().unwrap();
            let len = circle.len();
            if hi - lo + 1 != len {
                return Err(DiagramError::Malformed(format!(
                    "component arcs {}..{} are not consecutive",
                    lo + 1,
                    hi + 1
                )));
            }
            if len >= 3 {
                let p = circle.iter().position(|&a| a == lo).unwrap();
                let asc = (0..len).all(|i| circle[(p + i) % len] == lo + i);
                let desc = (0..len).all(|i| circle[(p + len - i) % len] == lo + i);
                if !asc && !desc {
                    return Err(DiagramError::Malformed(format!(
                        "component arcs starting at {} do not follow a single direction",
                        lo + 1
                    )));
                }
            }
        }
        circles.sort_by_key(|c| *c.iter().min().unwrap());

        let mut comp_of_arc = vec![0usize; arc_count];
        let mut comp_blocks = Vec::with_capacity(circles.len());
        for (k, circle) in circles.iter().enumerate() {
            let lo = *circle.iter().min().unwrap();
            comp_blocks.push((lo, circle.len()));
            for &a in circle {
                comp_of_arc[a] = k;
            }
        }

        // Resolve the in-arc of every passage.  For components of length
        // >= 3 the numbering decides.  Length-2 components are settled by
        // written under declarations, or by the smaller-crossing convention
        // when the component passes over twice.  Length-1 components take
        // records as written.
        let block = |k: usize| comp_blocks[k];
        let next = |a: usize| {
            let (s, l) = block(comp_of_arc[a]);
            s + (a - s + 1) % l
        };

        // in-arc per (crossing, passage): passage 0 = under, 1 = over.
        let mut in_arc: Vec<[Option<usize>; 2]> = vec![[None, None]; records.len()];
        for (k, _) in circles.iter().enumerate() {
            let (lo, len) = block(k);
            // Passages touched by this component.
            let mut passages: Vec<(usize, usize, [usize; 2])> = Vec::new();
            for (x, (ends, _)) in records.iter().enumerate() {
                if comp_of_arc[ends[0]] == k {
                    passages.push((x, 0, [ends[0], ends[2]]));
                }
                if comp_of_arc[ends[1]] == k {
                    passages.push((x, 1, [ends[1], ends[3]]));
                }
            }
            match len {
                1 => {
                    // Single self-closing arc: under as written, over enters
                    // at slot 1 by convention.
                    for &(x, p, pair) in &passages {
                        in_arc[x][p] = Some(pair[0]);
                    }
                }
                2 => {
                    let m = lo;
                    let declared: Vec<(usize, usize)> = passages
                        .iter()
                        .filter(|&&(_, p, _)| p == 0)
                        .map(|&(x, _, pair)| (x, pair[0]))
                        .collect();
                    let assign = match declared.len() {
                        2 => {
                            if declared[0].1 == declared[1].1 {
                                return Err(DiagramError::Orientation(format!(
                                    "arc {} declared incoming at two crossings",
                                    declared[0].1 + 1
                                )));
                            }
                            None
                        }
                        1 => None,
                        _ => {
                            // Over at both passages: the smaller-index
                            // crossing consumes the smaller arc.
                            let mut xs: Vec<usize> =
                                passages.iter().map(|&(x, _, _)| x).collect();
                            xs.sort_unstable();
                            Some((xs[0], m))
                        }
                    };
                    for &(x, p, pair) in &passages {
                        let inc = if p == 0 {
                            pair[0]
                        } else if let Some((x0, a0)) = assign {
                            if x == x0 {
                                a0
                            } else {
                                m + (m + 1) - a0
                            }
                        } else {
                            // Complementary to the declared under passage.
                            let (_, a_dec) = declared[0];
                            m + (m + 1) - a_dec
                        };
                        in_arc[x][p] = Some(inc);
                    }
                    // Consistency: the two passages must consume different
                    // arcs.
                    let ins: Vec<usize> =
                        passages.iter().map(|&(x, p, _)| in_arc[x][p].unwrap()).collect();
                    if ins.len() == 2 && ins[0] == ins[1] {
                        return Err(DiagramError::Orientation(format!(
                            "arc {} would terminate twice",
                            ins[0] + 1
                        )));
                    }
                }
                _ => {
                    for &(x, p, pair) in &passages {
                        let [u, v] = pair;
                        if next(u) == v {
                            in_arc[x][p] = Some(u);
                        } else if next(v) == u {
                            in_arc[x][p] = Some(v);
                        } else {
                            return Err(DiagramError::Malformed(format!(
                                "arcs {} and {} do not meet consecutively at crossing {}",
                                u + 1,
                                v + 1,
                                x + 1
                            )));
                        }
                    }
                }
            }
        }

        // Rotate C records whose under-in was written at slot 2; derive the
        // over-in slot.
        let mut crossings = Vec::with_capacity(records.len());
        let mut over_in = Vec::with_capacity(records.len());
        for (x, &(ends, kind)) in records.iter().enumerate() {
            let under_in = in_arc[x][0].unwrap();
            let e = if ends[0] == under_in {
                ends
            } else if ends[2] == under_in && kind == RecordKind::C {
                [ends[2], ends[3], ends[0], ends[1]]
            } else {
                return Err(DiagramError::Orientation(format!(
                    "crossing {}: under strand enters at arc {}, record starts at arc {}",
                    x + 1,
                    under_in + 1,
                    ends[0] + 1
                )));
            };
            let o_in = in_arc[x][1].unwrap();
            let slot = if e[1] == o_in {
                1
            } else if e[3] == o_in {
                3
            } else {
                return Err(DiagramError::Orientation(format!(
                    "crossing {}: over strand in-arc {} not on the over pair",
                    x + 1,
                    o_in + 1
                )));
            };
            crossings.push(Crossing { ends: e });
            over_in.push(slot as u8);
        }

        let d = LinkDiagram {
            crossings,
            over_in,
            arc_count,
            free_loops,
            comp_of_arc,
            comp_blocks,
        };
        d.validate()?;
        Ok(d)
    }

    /// Checks internal consistency: arc occurrences, in/out ends, and
    /// block-consecutive numbering along every component.
    fn validate(&self) -> Result<(), DiagramError> {
        if self.crossings.is_empty() && self.free_loops == 0 {
            return Err(DiagramError::Malformed("empty diagram".into()));
        }
        let mut seen_in = vec![false; self.arc_count];
        let mut seen_out = vec![false; self.arc_count];
        for (x, c) in self.crossings.iter().enumerate() {
            let o = self.over_in[x] as usize;
            if o != 1 && o != 3 {
                return Err(DiagramError::Malformed(format!(
                    "crossing {}: over-in slot {o}",
                    x + 1
                )));
            }
            for (s, &a) in c.ends.iter().enumerate() {
                if a >= self.arc_count {
                    return Err(DiagramError::BadIndex(format!("arc {}", a + 1)));
                }
                let incoming = s == 0 || s == o;
                let seen = if incoming { &mut seen_in } else { &mut seen_out };
                if seen[a] {
                    return Err(DiagramError::Malformed(format!(
                        "arc {} has two {} ends",
                        a + 1,
                        if incoming { "incoming" } else { "outgoing" }
                    )));
                }
                seen[a] = true;
            }
        }
        if let Some(a) = seen_in.iter().position(|&b| !b) {
            if self.arc_count > 0 {
                return Err(DiagramError::Malformed(format!(
                    "arc {} never terminates",
                    a + 1
                )));
            }
        }
        // Numbering must advance by one along each component.
        let (in_end, _) = self.end_maps();
        let mut covered = 0usize;
        for (k, &(start, len)) in self.comp_blocks.iter().enumerate() {
            covered += len;
            let mut a = start;
            for _ in 0..len {
                if self.comp_of_arc[a] != k {
                    return Err(DiagramError::Malformed(format!(
                        "arc {} assigned to the wrong component",
                        a + 1
                    )));
                }
                let (x, s) = in_end[a];
                let nxt = self.crossings[x].ends[((s as usize) + 2) % 4];
                let expect = start + (a - start + 1) % len;
                if nxt != expect {
                    return Err(DiagramError::Malformed(format!(
                        "arc {} flows into {}, expected {}",
                        a + 1,
                        nxt + 1,
                        expect + 1
                    )));
                }
                a = nxt;
            }
        }
        if covered != self.arc_count {
            return Err(DiagramError::Malformed(
                "component blocks do not cover all arcs".into(),
            ));
        }
        Ok(())
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of arcs.
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Number of crossing-free loop components.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Total number of link components.
    pub fn mu(&self) -> usize {
        self.comp_blocks.len() + self.free_loops
    }

    pub fn crossing(&self, x: usize) -> &Crossing {
        &self.crossings[x]
    }

    /// Slot (1 or 3) where the over strand enters crossing `x`.
    pub fn over_in(&self, x: usize) -> usize {
        self.over_in[x] as usize
    }

    /// Crossing sign under the stored orientation.
    pub fn sign(&self, x: usize) -> i8 {
        if self.over_in[x] == 3 {
            1
        } else {
            -1
        }
    }

    /// Whether the two strands of crossing `x` lie on different components.
    pub fn is_inter(&self, x: usize) -> bool {
        let c = &self.crossings[x];
        self.comp_of_arc[c.ends[0]] != self.comp_of_arc[c.ends[self.over_in[x] as usize]]
    }

    pub fn component_of_arc(&self, a: usize) -> usize {
        self.comp_of_arc[a]
    }

    /// (first arc, arc count) of crossing-carrying component `k`.
    pub fn component_block(&self, k: usize) -> (usize, usize) {
        self.comp_blocks[k]
    }

    /// Number of crossing-carrying components.
    pub fn crossing_component_count(&self) -> usize {
        self.comp_blocks.len()
    }

    /// Successor arc along the stored orientation.
    pub fn next_arc(&self, a: usize) -> usize {
        let (s, l) = self.comp_blocks[self.comp_of_arc[a]];
        s + (a - s + 1) % l
    }

    /// For each arc, the (crossing, slot) where it terminates and where it
    /// originates.
    pub(crate) fn end_maps(&self) -> (Vec<(usize, u8)>, Vec<(usize, u8)>) {
        let mut in_end = vec![(usize::MAX, 0u8); self.arc_count];
        let mut birth_end = vec![(usize::MAX, 0u8); self.arc_count];
        for (x, c) in self.crossings.iter().enumerate() {
            let o = self.over_in[x] as usize;
            for (s, &a) in c.ends.iter().enumerate() {
                if s == 0 || s == o {
                    in_end[a] = (x, s as u8);
                } else {
                    birth_end[a] = (x, s as u8);
                }
            }
        }
        (in_end, birth_end)
    }

    /// Classifies all crossings by walking components in context order.
    pub fn classify(&self, ctx: &TraversalContext) -> Result<CrossingReport, DiagramError> {
        let n = self.comp_blocks.len();
        if ctx.order.len() != n || ctx.base.len() != n || ctx.dir.len() != n {
            return Err(DiagramError::BadIndex(
                "context size does not match component count".into(),
            ));
        }
        let mut perm = vec![false; n];
        for &k in &ctx.order {
            if k >= n || perm[k] {
                return Err(DiagramError::BadIndex("context order is not a permutation".into()));
            }
            perm[k] = true;
        }
        for k in 0..n {
            let (s, l) = self.comp_blocks[k];
            if ctx.base[k] < s || ctx.base[k] >= s + l {
                return Err(DiagramError::BadIndex(format!(
                    "base arc {} outside component {}",
                    ctx.base[k] + 1,
                    k + 1
                )));
            }
        }

        let (in_end, birth_end) = self.end_maps();
        let mut status = vec![
            CrossingStatus {
                bad: false,
                inter: false,
                sign: 0
            };
            self.crossings.len()
        ];
        let mut seen = vec![false; self.crossings.len()];
        let mut first_bad = None;
        let mut bad_count = 0usize;
        for &k in &ctx.order {
            let (_, len) = self.comp_blocks[k];
            let mut a = ctx.base[k];
            for _ in 0..len {
                let (x, s) = if ctx.dir[k] { in_end[a] } else { birth_end[a] };
                if !seen[x] {
                    seen[x] = true;
                    let bad = s % 2 == 1;
                    status[x].bad = bad;
                    if bad {
                        bad_count += 1;
                        if first_bad.is_none() {
                            first_bad = Some(x);
                        }
                    }
                }
                a = self.crossings[x].ends[((s as usize) + 2) % 4];
            }
        }
        let mut writhe = 0i64;
        for (x, c) in self.crossings.iter().enumerate() {
            let under_comp = self.comp_of_arc[c.ends[0]];
            let over_comp = self.comp_of_arc[c.ends[self.over_in[x] as usize]];
            status[x].inter = under_comp != over_comp;
            let mut sign = self.sign(x);
            if !ctx.dir[under_comp] {
                sign = -sign;
            }
            if !ctx.dir[over_comp] {
                sign = -sign;
            }
            status[x].sign = sign;
            writhe += sign as i64;
        }
        Ok(CrossingReport {
            crossings: status,
            first_bad,
            bad_count,
            writhe,
        })
    }

    /// Exchanges the over and under strands at crossing `x`.  Arc numbering,
    /// orientations, and all other crossings are unchanged.
    pub fn switch(&self, x: usize) -> LinkDiagram {
        let mut d = self.clone();
        let o = self.over_in[x] as usize;
        let e = self.crossings[x].ends;
        d.crossings[x] = Crossing {
            ends: [e[o], e[(o + 1) % 4], e[(o + 2) % 4], e[(o + 3) % 4]],
        };
        d.over_in[x] = (4 - o) as u8;
        d
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        for x in 0..self.crossings.len() {
            d = d.switch(x);
        }
        d
    }

    /// Replaces crossing `x` by a smoothing, reconnecting the four ends.
    pub fn smooth(&self, x: usize, kind: Smoothing) -> LinkDiagram {
        let splices = match kind {
            Smoothing::I => [((x, 0u8), (x, 1u8)), ((x, 2u8), (x, 3u8))],
            Smoothing::II => [((x, 0u8), (x, 3u8)), ((x, 1u8), (x, 2u8))],
        };
        self.detach(&[x], &splices)
    }

    /// Removes the given crossings and reconnects their freed ends according
    /// to `splices`.  Every end of a removed crossing must appear in exactly
    /// one splice.  Arc chains merge, components renumber by their smallest
    /// original arc, and the piece containing that arc keeps its direction.
    pub(crate) fn detach(
        &self,
        removed: &[usize],
        splices: &[((usize, u8), (usize, u8))],
    ) -> LinkDiagram {
        let mut is_removed = vec![false; self.crossings.len()];
        for &x in removed {
            is_removed[x] = true;
        }
        let mut splice = alloc::collections::BTreeMap::new();
        for &(p, q) in splices {
            splice.insert(p, q);
            splice.insert(q, p);
        }
        let (in_end, birth_end) = self.end_maps();
        let arc_at = |e: (usize, u8)| self.crossings[e.0].ends[e.1 as usize];

        let mut visited = vec![false; self.arc_count];
        let mut new_free = self.free_loops;
        // Per original arc: new arc id and whether its direction flips.
        let mut new_id = vec![usize::MAX; self.arc_count];
        let mut flip = vec![false; self.arc_count];
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut next_arc_id = 0usize;
        for m in 0..self.arc_count {
            if visited[m] {
                continue;
            }
            // Walk the circle through arc m forward, recording direction and
            // the surviving passages (chain cuts).
            let mut seq: Vec<(usize, bool)> = Vec::new();
            let mut cut_after: Vec<bool> = Vec::new();
            let mut state = (m, true);
            loop {
                let (a, fwd) = state;
                visited[a] = true;
                seq.push(state);
                let e = if fwd { in_end[a] } else { birth_end[a] };
                if is_removed[e.0] {
                    let e2 = *splice.get(&e).expect("splice covers removed ends");
                    let b = arc_at(e2);
                    cut_after.push(false);
                    state = (b, e2 == birth_end[b]);
                } else {
                    let b = self.crossings[e.0].ends[((e.1 as usize) + 2) % 4];
                    cut_after.push(true);
                    state = (b, fwd);
                }
                if state == (m, true) {
                    break;
                }
            }
            let cuts = cut_after.iter().filter(|&&c| c).count();
            if cuts == 0 {
                new_free += 1;
                continue;
            }
            // Chains between surviving passages become the new arcs.  Number
            // them in walk order starting at the chain containing m.
            let len = seq.len();
            let mut start = 0usize;
            while !cut_after[(start + len - 1) % len] {
                start = (start + len - 1) % len;
            }
            let block_start = next_arc_id;
            let mut i = start;
            loop {
                // Consume one chain.
                loop {
                    let (a, fwd) = seq[i];
                    new_id[a] = next_arc_id;
                    flip[a] = !fwd;
                    let done = cut_after[i];
                    i = (i + 1) % len;
                    if done {
                        break;
                    }
                }
                next_arc_id += 1;
                if i == start {
                    break;
                }
            }
            blocks.push((block_start, next_arc_id - block_start));
        }

        // Rebuild surviving records.
        let mut crossings = Vec::new();
        let mut over_in = Vec::new();
        for (x, c) in self.crossings.iter().enumerate() {
            if is_removed[x] {
                continue;
            }
            let e = c.ends;
            let uf = flip[e[0]];
            let of = flip[e[1]];
            debug_assert_eq!(uf, flip[e[2]], "under strand flip mismatch");
            debug_assert_eq!(of, flip[e[3]], "over strand flip mismatch");
            let r = if uf { [e[2], e[3], e[0], e[1]] } else { e };
            let mut o = self.over_in[x] as usize;
            if uf {
                o = (o + 2) % 4;
            }
            if of {
                o = (o + 2) % 4;
            }
            crossings.push(Crossing {
                ends: [
                    new_id[r[0]],
                    new_id[r[1]],
                    new_id[r[2]],
                    new_id[r[3]],
                ],
            });
            over_in.push(o as u8);
        }

        let mut comp_of_arc = vec![0usize; next_arc_id];
        for (k, &(s, l)) in blocks.iter().enumerate() {
            for a in s..s + l {
                comp_of_arc[a] = k;
            }
        }
        let d = LinkDiagram {
            crossings,
            over_in,
            arc_count: next_arc_id,
            free_loops: new_free,
            comp_of_arc,
            comp_blocks: blocks,
        };
        debug_assert_eq!(d.validate(), Ok(()));
        d
    }

    /// Assembles a diagram from records whose ends are (original arc, piece)
    /// pairs ordered lexicographically.  Used by moves that split arcs; the
    /// records must already be direction-consistent.
    pub(crate) fn assemble_from_temp(
        records: &[[(usize, u8); 4]],
        over_in: &[u8],
        free_loops: usize,
    ) -> LinkDiagram {
        use alloc::collections::BTreeMap;
        let mut in_end: BTreeMap<(usize, u8), (usize, u8)> = BTreeMap::new();
        let mut ids: BTreeMap<(usize, u8), usize> = BTreeMap::new();
        for (x, r) in records.iter().enumerate() {
            let o = over_in[x] as usize;
            for (s, &t) in r.iter().enumerate() {
                ids.entry(t).or_insert(usize::MAX);
                if s == 0 || s == o {
                    in_end.insert(t, (x, s as u8));
                }
            }
        }
        let mut blocks = Vec::new();
        let mut next_id = 0usize;
        let temps: Vec<(usize, u8)> = ids.keys().copied().collect();
        for &t0 in &temps {
            if ids[&t0] != usize::MAX {
                continue;
            }
            let start = next_id;
            let mut t = t0;
            loop {
                *ids.get_mut(&t).unwrap() = next_id;
                next_id += 1;
                let (x, s) = in_end[&t];
                t = records[x][((s as usize) + 2) % 4];
                if t == t0 {
                    break;
                }
            }
            blocks.push((start, next_id - start));
        }
        let crossings: Vec<Crossing> = records
            .iter()
            .map(|r| Crossing {
                ends: [ids[&r[0]], ids[&r[1]], ids[&r[2]], ids[&r[3]]],
            })
            .collect();
        let mut comp_of_arc = vec![0usize; next_id];
        for (k, &(s, l)) in blocks.iter().enumerate() {
            for a in s..s + l {
                comp_of_arc[a] = k;
            }
        }
        let d = LinkDiagram {
            crossings,
            over_in: over_in.to_vec(),
            arc_count: next_id,
            free_loops,
            comp_of_arc,
            comp_blocks: blocks,
        };
        debug_assert_eq!(d.validate(), Ok(()));
        d
    }

    /// Places two diagrams side by side.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let shift = self.arc_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            ends: [
                c.ends[0] + shift,
                c.ends[1] + shift,
                c.ends[2] + shift,
                c.ends[3] + shift,
            ],
        }));
        let mut over_in = self.over_in.clone();
        over_in.extend_from_slice(&other.over_in);
        let mut comp_of_arc = self.comp_of_arc.clone();
        let nk = self.comp_blocks.len();
        comp_of_arc.extend(other.comp_of_arc.iter().map(|&k| k + nk));
        let mut comp_blocks = self.comp_blocks.clone();
        comp_blocks.extend(other.comp_blocks.iter().map(|&(s, l)| (s + shift, l)));
        let d = LinkDiagram {
            crossings,
            over_in,
            arc_count: self.arc_count + other.arc_count,
            free_loops: self.free_loops + other.free_loops,
            comp_of_arc,
            comp_blocks,
        };
        debug_assert_eq!(d.validate(), Ok(()));
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> LinkDiagram {
        LinkDiagram::from_parts(
            &[([0, 2, 1, 3], RecordKind::C), ([2, 0, 3, 1], RecordKind::C)],
            0,
        )
        .unwrap()
    }

    fn kink_pos() -> LinkDiagram {
        LinkDiagram::from_parts(&[([0, 0, 1, 1], RecordKind::C)], 0).unwrap()
    }

    fn kink_neg() -> LinkDiagram {
        LinkDiagram::from_parts(&[([0, 1, 1, 0], RecordKind::C)], 0).unwrap()
    }

    #[test]
    fn hopf_structure() {
        let d = hopf();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.mu(), 2);
        assert_eq!(d.over_in(0), 3);
        assert_eq!(d.over_in(1), 3);
        assert_eq!(d.sign(0), 1);
        assert_eq!(d.sign(1), 1);
        assert!(d.is_inter(0) && d.is_inter(1));
    }

    #[test]
    fn hopf_classify() {
        let d = hopf();
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, 2);
        assert_eq!(r.bad_count, 1);
        assert_eq!(r.first_bad, Some(1));
        assert!(!r.crossings[0].bad);
        assert!(r.crossings[1].bad);
    }

    #[test]
    fn hopf_switch_is_monotone() {
        let d = hopf().switch(1);
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.bad_count, 0);
        assert_eq!(r.writhe, 0);
    }

    #[test]
    fn switch_is_involutive() {
        let d = hopf();
        assert_eq!(d.switch(1).switch(1), d);
        let k = kink_pos();
        assert_eq!(k.switch(0).switch(0), k);
    }

    #[test]
    fn kinks_are_monotone() {
        for d in [kink_pos(), kink_neg()] {
            let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
            assert_eq!(r.bad_count, 0);
        }
        assert_eq!(kink_pos().sign(0), 1);
        assert_eq!(kink_neg().sign(0), -1);
    }

    #[test]
    fn kink_reversed_direction_is_bad() {
        let d = kink_pos();
        let ctx = TraversalContext {
            order: vec![0],
            base: vec![0],
            dir: vec![false],
        };
        let r = d.classify(&ctx).unwrap();
        assert_eq!(r.bad_count, 1);
        // A self-crossing keeps its sign when the component reverses.
        assert_eq!(r.writhe, 1);
    }

    #[test]
    fn smooth_kink() {
        let d = kink_pos();
        let a = d.smooth(0, Smoothing::I);
        assert_eq!(a.crossing_count(), 0);
        assert_eq!(a.free_loops(), 2);
        let b = d.smooth(0, Smoothing::II);
        assert_eq!(b.crossing_count(), 0);
        assert_eq!(b.free_loops(), 1);
    }

    #[test]
    fn smooth_hopf_gives_kinks() {
        let d = hopf();
        let a = d.smooth(1, Smoothing::I);
        assert_eq!(a.crossing_count(), 1);
        assert_eq!(a.mu(), 1);
        assert_eq!(a.crossing(0).ends, [0, 0, 1, 1]);
        assert_eq!(a.over_in(0), 3);
        let b = d.smooth(1, Smoothing::II);
        assert_eq!(b.crossing(0).ends, [0, 1, 1, 0]);
        assert_eq!(b.over_in(0), 1);
        assert_eq!(b.sign(0), -1);
    }

    #[test]
    fn smoothing_component_counts() {
        // Inter-component smoothings always merge; self smoothings split or
        // keep the count.
        let d = hopf();
        assert_eq!(d.smooth(0, Smoothing::I).mu(), 1);
        assert_eq!(d.smooth(0, Smoothing::II).mu(), 1);
        let k = kink_pos();
        assert_eq!(k.smooth(0, Smoothing::I).mu(), 2);
        assert_eq!(k.smooth(0, Smoothing::II).mu(), 1);
    }

    #[test]
    fn degenerate_self_closing_arcs() {
        let d = LinkDiagram::from_parts(&[([0, 1, 0, 1], RecordKind::C)], 0).unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.over_in(0), 1);
        // First visit reaches the crossing along its under strand.
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.bad_count, 0);
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        assert!(LinkDiagram::from_parts(&[], 0).is_err());
        // Arc appearing once.
        assert!(LinkDiagram::from_parts(&[([0, 1, 2, 3], RecordKind::C)], 0).is_err());
        // Gap in numbering (arcs 0,0,2,2).
        assert!(LinkDiagram::from_parts(&[([0, 0, 2, 2], RecordKind::C)], 0).is_err());
        // X record with under-in written at slot 2: rejected as strict, but
        // the same ends parse as a C record.
        let rotated = [
            ([1, 4, 0, 3], RecordKind::X),
            ([2, 5, 3, 0], RecordKind::X),
            ([4, 1, 5, 2], RecordKind::X),
        ];
        assert!(matches!(
            LinkDiagram::from_parts(&rotated, 0),
            Err(DiagramError::Orientation(_))
        ));
        let loose = [
            ([1, 4, 0, 3], RecordKind::C),
            ([2, 5, 3, 0], RecordKind::C),
            ([4, 1, 5, 2], RecordKind::C),
        ];
        let d = LinkDiagram::from_parts(&loose, 0).unwrap();
        assert_eq!(d.crossing(0).ends, [0, 3, 1, 4]);
    }

    #[test]
    fn conflicting_under_declarations() {
        // Both records claim arc 0 enters; the two-arc component cannot
        // terminate twice at the same arc.
        let r = LinkDiagram::from_parts(
            &[([0, 2, 1, 3], RecordKind::C), ([0, 3, 1, 2], RecordKind::C)],
            0,
        );
        assert!(matches!(r, Err(DiagramError::Orientation(_))));
    }

    #[test]
    fn mirror_flips_all_signs() {
        let d = hopf().mirror();
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, -2);
        assert_eq!(d.mirror(), hopf());
    }

    #[test]
    fn union_shifts_components() {
        let d = kink_pos().disjoint_union(&hopf());
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.mu(), 3);
        assert_eq!(d.crossing(1).ends, [2, 4, 3, 5]);
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, 3);
    }

    #[test]
    fn free_loops_only() {
        let d = LinkDiagram::from_parts(&[], 2).unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn trefoil_signs() {
        let d = LinkDiagram::from_parts(
            &[
                ([0, 3, 1, 4], RecordKind::X),
                ([2, 5, 3, 0], RecordKind::X),
                ([4, 1, 5, 2], RecordKind::X),
            ],
            0,
        )
        .unwrap();
        assert_eq!(d.mu(), 1);
        for x in 0..3 {
            assert_eq!(d.sign(x), -1);
            assert!(!d.is_inter(x));
        }
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, -3);
    }
}
