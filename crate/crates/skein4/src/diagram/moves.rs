//! Reidemeister moves: detection of applicable sites and application.
//!
//! Faces are traced through the crossing rotation: a strand arriving at slot
//! `s` continues along the arc at slot `(s+1) % 4`, keeping the face on the
//! right of travel.  Downward moves (kink removal, bigon removal, triangle
//! slide) are read off the face structure; upward moves apply anywhere.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram};

/// One strand of a prospective poke: an arc traversed with or against its
/// orientation, or a crossing-free loop (which may sit in any face).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DartRef {
    Arc { arc: usize, fwd: bool },
    FreeLoop,
}

/// A single Reidemeister move site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveSpec {
    /// Adds a kink on `arc`, or twists a free loop when `arc` is `None`.
    /// `over_first` picks the side of the strand the loop hangs on.
    R1Plus {
        arc: Option<usize>,
        positive: bool,
        over_first: bool,
    },
    /// Removes the kink at `crossing`.
    R1Minus { crossing: usize },
    /// Pokes `over` across a shared face so it passes over `under` twice.
    R2Plus { over: DartRef, under: DartRef },
    /// Pulls apart the bigon with these two corner crossings.
    R2Minus { crossings: (usize, usize) },
    /// Slides a strand across the triangle face with these side arcs,
    /// listed in face order starting from the smallest.
    R3 { arcs: [usize; 3] },
}

impl LinkDiagram {
    /// Face boundaries as orbits of (arc, travel direction) darts.  Free
    /// loops bound their own faces and are not listed.
    pub fn faces(&self) -> Vec<Vec<(usize, bool)>> {
        let (in_end, birth_end) = self.end_maps();
        let mut seen = vec![false; 2 * self.arc_count()];
        let mut out = Vec::new();
        for a in 0..self.arc_count() {
            for fwd in [true, false] {
                if seen[2 * a + fwd as usize] {
                    continue;
                }
                let mut orbit = Vec::new();
                let mut d = (a, fwd);
                loop {
                    seen[2 * d.0 + d.1 as usize] = true;
                    orbit.push(d);
                    let (x, s) = if d.1 { in_end[d.0] } else { birth_end[d.0] };
                    let t = (s as usize + 1) % 4;
                    let o = self.over_in(x);
                    let b = self.crossing(x).ends[t];
                    d = (b, t == 2 || t == (o + 2) % 4);
                    if d == (a, fwd) {
                        break;
                    }
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Every applicable move, in a fixed deterministic order: kink removals,
    /// bigon removals, triangle slides, kink additions, pokes.
    pub fn find_moves(&self) -> Vec<MoveSpec> {
        let mut out = Vec::new();
        for x in 0..self.crossing_count() {
            if self.kink_loop(x).is_some() {
                out.push(MoveSpec::R1Minus { crossing: x });
            }
        }
        let (in_end, birth_end) = self.end_maps();
        let arrive = |d: (usize, bool)| if d.1 { in_end[d.0] } else { birth_end[d.0] };
        let faces = self.faces();
        for f in &faces {
            if f.len() == 2 {
                let (c0, s0) = arrive(f[0]);
                let (c1, s1) = arrive(f[1]);
                if c0 != c1 && f[0].0 != f[1].0 && s0 % 2 == (s1 + 1) % 2 {
                    out.push(MoveSpec::R2Minus {
                        crossings: (c0.min(c1), c0.max(c1)),
                    });
                }
            }
        }
        for f in &faces {
            if let Some(arcs) = self.triangle_site(f, &arrive) {
                out.push(MoveSpec::R3 { arcs });
            }
        }
        for arc in 0..self.arc_count() {
            for positive in [true, false] {
                for over_first in [false, true] {
                    out.push(MoveSpec::R1Plus {
                        arc: Some(arc),
                        positive,
                        over_first,
                    });
                }
            }
        }
        if self.free_loops() > 0 {
            for positive in [true, false] {
                for over_first in [false, true] {
                    out.push(MoveSpec::R1Plus {
                        arc: None,
                        positive,
                        over_first,
                    });
                }
            }
        }
        for f in &faces {
            for i in 0..f.len() {
                for j in 0..f.len() {
                    if i != j && f[i].0 != f[j].0 {
                        out.push(MoveSpec::R2Plus {
                            over: DartRef::Arc {
                                arc: f[i].0,
                                fwd: f[i].1,
                            },
                            under: DartRef::Arc {
                                arc: f[j].0,
                                fwd: f[j].1,
                            },
                        });
                    }
                }
            }
        }
        if self.free_loops() > 0 {
            for arc in 0..self.arc_count() {
                for fwd in [true, false] {
                    out.push(MoveSpec::R2Plus {
                        over: DartRef::Arc { arc, fwd },
                        under: DartRef::FreeLoop,
                    });
                    out.push(MoveSpec::R2Plus {
                        over: DartRef::FreeLoop,
                        under: DartRef::Arc { arc, fwd },
                    });
                }
            }
        }
        if self.free_loops() > 1 {
            out.push(MoveSpec::R2Plus {
                over: DartRef::FreeLoop,
                under: DartRef::FreeLoop,
            });
        }
        out
    }

    /// Applies one move, returning the rewritten diagram.
    pub fn apply_move(&self, m: &MoveSpec) -> Result<LinkDiagram, DiagramError> {
        match m {
            MoveSpec::R1Plus {
                arc,
                positive,
                over_first,
            } => self.apply_r1_plus(*arc, *positive, *over_first),
            MoveSpec::R1Minus { crossing } => self.apply_r1_minus(*crossing),
            MoveSpec::R2Plus { over, under } => self.apply_r2_plus(*over, *under),
            MoveSpec::R2Minus { crossings } => self.apply_r2_minus(*crossings),
            MoveSpec::R3 { arcs } => self.apply_r3(*arcs),
        }
    }

    /// The kink loop arc at `x`, if the crossing is a kink.
    fn kink_loop(&self, x: usize) -> Option<usize> {
        let e = self.crossing(x).ends;
        let o = self.over_in(x);
        if e[2] == e[o] {
            Some(e[2])
        } else if e[(o + 2) % 4] == e[0] {
            Some(e[0])
        } else {
            None
        }
    }

    /// Checks a length-3 face for a slideable triangle and returns its side
    /// arcs rotated so the smallest comes first.
    fn triangle_site(
        &self,
        f: &[(usize, bool)],
        arrive: &dyn Fn((usize, bool)) -> (usize, u8),
    ) -> Option<[usize; 3]> {
        if f.len() != 3 {
            return None;
        }
        let arcs = [f[0].0, f[1].0, f[2].0];
        if arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2] {
            return None;
        }
        let ends: Vec<(usize, u8)> = f.iter().map(|&d| arrive(d)).collect();
        if ends[0].0 == ends[1].0 || ends[1].0 == ends[2].0 || ends[0].0 == ends[2].0 {
            return None;
        }
        // A side keeping one height across both its corners breaks the
        // cyclic over pattern and admits the slide.
        let level = (0..3).any(|i| ends[i].1 % 2 == (ends[(i + 2) % 3].1 + 1) % 2);
        if !level {
            return None;
        }
        let k = (0..3).min_by_key(|&i| arcs[i]).unwrap();
        Some([arcs[k], arcs[(k + 1) % 3], arcs[(k + 2) % 3]])
    }

    /// Existing records translated to (arc, piece) ends, with the in-ends of
    /// arcs listed in `split` moved to piece 2.
    fn temp_records(&self, split: &[usize]) -> (Vec<[(usize, u8); 4]>, Vec<u8>) {
        let mut recs = Vec::with_capacity(self.crossing_count() + 2);
        let mut overs = Vec::with_capacity(self.crossing_count() + 2);
        for x in 0..self.crossing_count() {
            let o = self.over_in(x);
            let e = self.crossing(x).ends;
            let mut r = [(0usize, 0u8); 4];
            for (s, &a) in e.iter().enumerate() {
                let is_in = s == 0 || s == o;
                let piece = if is_in && split.contains(&a) { 2 } else { 0 };
                r[s] = (a, piece);
            }
            recs.push(r);
            overs.push(o as u8);
        }
        (recs, overs)
    }

    fn apply_r1_plus(
        &self,
        arc: Option<usize>,
        positive: bool,
        over_first: bool,
    ) -> Result<LinkDiagram, DiagramError> {
        let (f, l, g, free, split);
        match arc {
            Some(a) => {
                if a >= self.arc_count() {
                    return Err(DiagramError::BadIndex(format!("no arc {}", a + 1)));
                }
                f = (a, 0u8);
                l = (a, 1u8);
                g = (a, 2u8);
                free = self.free_loops();
                split = Some(a);
            }
            None => {
                if self.free_loops() == 0 {
                    return Err(DiagramError::NoSuchMove("no free loop to twist".into()));
                }
                f = (self.arc_count(), 0u8);
                l = (self.arc_count(), 1u8);
                g = f;
                free = self.free_loops() - 1;
                split = None;
            }
        }
        let (mut recs, mut overs) = match split {
            Some(a) => self.temp_records(&[a]),
            None => self.temp_records(&[]),
        };
        let (rec, o) = match (positive, over_first) {
            (true, false) => ([f, g, l, l], 3),
            (true, true) => ([l, l, g, f], 3),
            (false, false) => ([f, l, l, g], 1),
            (false, true) => ([l, f, g, l], 1),
        };
        recs.push(rec);
        overs.push(o);
        Ok(LinkDiagram::assemble_from_temp(&recs, &overs, free))
    }

    fn apply_r1_minus(&self, x: usize) -> Result<LinkDiagram, DiagramError> {
        if x >= self.crossing_count() {
            return Err(DiagramError::BadIndex(format!("no crossing {}", x + 1)));
        }
        if self.kink_loop(x).is_none() {
            return Err(DiagramError::NoSuchMove(format!(
                "crossing {} is not a kink",
                x + 1
            )));
        }
        Ok(self.detach(&[x], &[((x, 0), (x, 2)), ((x, 1), (x, 3))]))
    }

    fn apply_r2_plus(&self, over: DartRef, under: DartRef) -> Result<LinkDiagram, DiagramError> {
        match (over, under) {
            (DartRef::Arc { arc: p, fwd: fp }, DartRef::Arc { arc: q, fwd: fq }) => {
                if p >= self.arc_count() || q >= self.arc_count() {
                    return Err(DiagramError::BadIndex("poke arc out of range".into()));
                }
                if p == q {
                    return Err(DiagramError::NoSuchMove(
                        "cannot poke an arc across itself".into(),
                    ));
                }
                let shared = self
                    .faces()
                    .iter()
                    .any(|f| f.contains(&(p, fp)) && f.contains(&(q, fq)));
                if !shared {
                    return Err(DiagramError::NoSuchMove(
                        "darts do not bound a common face".into(),
                    ));
                }
                let pc = |k: u8| (p, k);
                let qc = |k: u8| (q, k);
                let (mut recs, mut overs) = self.temp_records(&[p, q]);
                // Records follow the under strand; the over strand's middle
                // piece passes both new crossings.
                let (r1, o1, r2, o2) = match (fp, fq) {
                    (true, true) => ([qc(0), pc(2), qc(1), pc(1)], 3, [qc(1), pc(0), qc(2), pc(1)], 1),
                    (true, false) => ([qc(0), pc(1), qc(1), pc(0)], 3, [qc(1), pc(1), qc(2), pc(2)], 1),
                    (false, true) => ([qc(0), pc(0), qc(1), pc(1)], 1, [qc(1), pc(2), qc(2), pc(1)], 3),
                    (false, false) => ([qc(0), pc(1), qc(1), pc(2)], 1, [qc(1), pc(1), qc(2), pc(0)], 3),
                };
                recs.push(r1);
                overs.push(o1);
                recs.push(r2);
                overs.push(o2);
                Ok(LinkDiagram::assemble_from_temp(
                    &recs,
                    &overs,
                    self.free_loops(),
                ))
            }
            (DartRef::Arc { arc: p, fwd }, DartRef::FreeLoop) => {
                if p >= self.arc_count() {
                    return Err(DiagramError::BadIndex("poke arc out of range".into()));
                }
                if self.free_loops() == 0 {
                    return Err(DiagramError::NoSuchMove("no free loop to poke".into()));
                }
                let pc = |k: u8| (p, k);
                let n = self.arc_count();
                let (l0, l1) = ((n, 0u8), (n, 1u8));
                let (mut recs, mut overs) = self.temp_records(&[p]);
                let (r1, o1, r2, o2) = if fwd {
                    ([l0, pc(0), l1, pc(1)], 1, [l1, pc(2), l0, pc(1)], 3)
                } else {
                    ([l1, pc(0), l0, pc(1)], 1, [l0, pc(2), l1, pc(1)], 3)
                };
                recs.push(r1);
                overs.push(o1);
                recs.push(r2);
                overs.push(o2);
                Ok(LinkDiagram::assemble_from_temp(
                    &recs,
                    &overs,
                    self.free_loops() - 1,
                ))
            }
            (DartRef::FreeLoop, DartRef::Arc { arc: q, fwd }) => {
                if q >= self.arc_count() {
                    return Err(DiagramError::BadIndex("poke arc out of range".into()));
                }
                if self.free_loops() == 0 {
                    return Err(DiagramError::NoSuchMove("no free loop to poke".into()));
                }
                let qc = |k: u8| (q, k);
                let n = self.arc_count();
                let (l0, l1) = ((n, 0u8), (n, 1u8));
                let (mut recs, mut overs) = self.temp_records(&[q]);
                let (r1, o1, r2, o2) = if fwd {
                    ([qc(0), l0, qc(1), l1], 3, [qc(1), l0, qc(2), l1], 1)
                } else {
                    ([qc(0), l1, qc(1), l0], 3, [qc(1), l1, qc(2), l0], 1)
                };
                recs.push(r1);
                overs.push(o1);
                recs.push(r2);
                overs.push(o2);
                Ok(LinkDiagram::assemble_from_temp(
                    &recs,
                    &overs,
                    self.free_loops() - 1,
                ))
            }
            (DartRef::FreeLoop, DartRef::FreeLoop) => {
                if self.free_loops() < 2 {
                    return Err(DiagramError::NoSuchMove(
                        "two free loops are required".into(),
                    ));
                }
                let n = self.arc_count();
                let (u0, u1) = ((n, 0u8), (n, 1u8));
                let (v0, v1) = ((n + 1, 0u8), (n + 1, 1u8));
                let (mut recs, mut overs) = self.temp_records(&[]);
                recs.push([u1, v0, u0, v1]);
                overs.push(1);
                recs.push([u0, v0, u1, v1]);
                overs.push(3);
                Ok(LinkDiagram::assemble_from_temp(
                    &recs,
                    &overs,
                    self.free_loops() - 2,
                ))
            }
        }
    }

    fn apply_r2_minus(&self, (a, b): (usize, usize)) -> Result<LinkDiagram, DiagramError> {
        if a >= self.crossing_count() || b >= self.crossing_count() {
            return Err(DiagramError::BadIndex("no such crossing pair".into()));
        }
        let (in_end, birth_end) = self.end_maps();
        let arrive = |d: (usize, bool)| if d.1 { in_end[d.0] } else { birth_end[d.0] };
        let found = self.faces().into_iter().any(|f| {
            if f.len() != 2 || f[0].0 == f[1].0 {
                return false;
            }
            let (c0, s0) = arrive(f[0]);
            let (c1, s1) = arrive(f[1]);
            ((c0, c1) == (a, b) || (c0, c1) == (b, a)) && c0 != c1 && s0 % 2 == (s1 + 1) % 2
        });
        if !found {
            return Err(DiagramError::NoSuchMove(format!(
                "crossings {} and {} do not bound a removable bigon",
                a + 1,
                b + 1
            )));
        }
        Ok(self.detach(
            &[a, b],
            &[
                ((a, 0), (a, 2)),
                ((a, 1), (a, 3)),
                ((b, 0), (b, 2)),
                ((b, 1), (b, 3)),
            ],
        ))
    }

    fn apply_r3(&self, arcs: [usize; 3]) -> Result<LinkDiagram, DiagramError> {
        let (in_end, birth_end) = self.end_maps();
        let arrive = |d: (usize, bool)| if d.1 { in_end[d.0] } else { birth_end[d.0] };
        let site = self.faces().into_iter().find_map(|f| {
            let site = self.triangle_site(&f, &arrive)?;
            if site == arcs {
                Some(site)
            } else {
                None
            }
        });
        if site.is_none() {
            return Err(DiagramError::NoSuchMove(
                "arcs do not bound a slideable triangle".into(),
            ));
        }
        // Each side strand swaps its two corner passages: the crossing met
        // first along the strand takes the passage from the second and vice
        // versa.  Heights and signs stay put, so only the ends move.
        let mut d = self.clone();
        for &v in &arcs {
            let (cin, u) = in_end[v];
            let (cout, t) = birth_end[v];
            let (u, t) = (u as usize, t as usize);
            let early = self.crossing(cout).ends[(t + 2) % 4];
            let late = self.crossing(cin).ends[(u + 2) % 4];
            d.crossings[cout].ends[(t + 2) % 4] = v;
            d.crossings[cout].ends[t] = late;
            d.crossings[cin].ends[u] = early;
            d.crossings[cin].ends[(u + 2) % 4] = v;
        }
        debug_assert_eq!(d.validate(), Ok(()));
        Ok(d)
    }
}
