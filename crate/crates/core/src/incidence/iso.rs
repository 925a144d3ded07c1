//! Backtracking search for incidence-preserving maps between two planes.
//!
//! A partial map is extended one point at a time. Every assignment is
//! propagated through joins and meets, so a branch collapses as soon as the
//! closure of the chosen points disagrees with the target. Candidate images
//! are filtered by incidence with every line already mapped.

use std::ops::ControlFlow;

use crate::bitset::PointSet;
use crate::incidence::ProjectivePlane;

const UNMAPPED: usize = usize::MAX;

#[derive(Clone, Copy)]
enum Pending {
    Point(usize, usize),
    Line(usize, usize),
}

#[derive(Clone, Copy)]
enum Undo {
    Point(usize),
    Line(usize),
}

/// Enumerates isomorphisms `src -> dst` (point map and line map) in a fixed
/// deterministic order.
pub struct IsomorphismSearch<'a> {
    src: &'a ProjectivePlane,
    dst: &'a ProjectivePlane,
    n: usize,
    pmap: Vec<usize>,
    lmap: Vec<usize>,
    pmapped: PointSet,
    lmapped: PointSet,
    pused: PointSet,
    lused: PointSet,
    trail: Vec<Undo>,
    queue: Vec<Pending>,
    base: Vec<usize>,
    consistent: bool,
}

impl<'a> IsomorphismSearch<'a> {
    pub fn new(src: &'a ProjectivePlane, dst: &'a ProjectivePlane) -> Self {
        let n = src.n();
        let mut search = IsomorphismSearch {
            src,
            dst,
            n,
            pmap: vec![UNMAPPED; n],
            lmap: vec![UNMAPPED; n],
            pmapped: PointSet::EMPTY,
            lmapped: PointSet::EMPTY,
            pused: PointSet::EMPTY,
            lused: PointSet::EMPTY,
            trail: Vec::new(),
            queue: Vec::new(),
            base: Vec::new(),
            consistent: src.order() == dst.order(),
        };
        if search.consistent {
            search.base = generating_quadrangle(src);
        }
        search
    }

    /// Require `p ↦ image`. Returns `false` if this contradicts earlier
    /// constraints (the search then yields nothing).
    pub fn fix_point(&mut self, p: usize, image: usize) -> bool {
        if self.consistent {
            self.queue.push(Pending::Point(p, image));
            self.consistent = self.drain();
        }
        self.consistent
    }

    /// Require `l ↦ image`.
    pub fn fix_line(&mut self, l: usize, image: usize) -> bool {
        if self.consistent {
            self.queue.push(Pending::Line(l, image));
            self.consistent = self.drain();
        }
        self.consistent
    }

    /// Visit every isomorphism extending the fixed constraints. The visitor
    /// receives `(point_map, line_map)` and may stop the walk early.
    pub fn for_each<F>(&mut self, mut visit: F)
    where
        F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    {
        if !self.consistent {
            return;
        }
        let _ = self.descend(&mut visit);
    }

    fn descend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    {
        let Some((p, candidates)) = self.choose() else {
            if self.pmapped.len() == self.n && self.lmapped.len() == self.n {
                return visit(&self.pmap, &self.lmap);
            }
            return ControlFlow::Continue(());
        };
        for image in candidates.iter() {
            let mark = self.trail.len();
            self.queue.push(Pending::Point(p, image));
            if self.drain() {
                self.descend(visit)?;
            }
            self.rollback(mark);
        }
        ControlFlow::Continue(())
    }

    /// Next point to branch on with its candidate images; `None` when every
    /// point is mapped or some point has no candidate left.
    fn choose(&self) -> Option<(usize, PointSet)> {
        if self.pmapped.len() == self.n {
            return None;
        }
        if self.pmapped.len() < 4 {
            if let Some(&p) = self.base.iter().find(|&&p| !self.pmapped.contains(p)) {
                return Some((p, self.candidates(p)));
            }
        }
        let mut best: Option<(usize, PointSet)> = None;
        for p in self.pmapped.complement(self.n).iter() {
            let c = self.candidates(p);
            if c.is_empty() {
                return None;
            }
            if best.is_none_or(|(_, b)| c.len() < b.len()) {
                best = Some((p, c));
            }
        }
        best
    }

    fn candidates(&self, p: usize) -> PointSet {
        let mut cand = self.pused.complement(self.n);
        let through = self.src.pencil(p);
        for l in self.lmapped.iter() {
            let image = self.dst.line(self.lmap[l]);
            if through.contains(l) {
                cand = cand.intersection(image);
            } else {
                cand = cand.difference(image);
            }
        }
        cand
    }

    fn drain(&mut self) -> bool {
        while let Some(item) = self.queue.pop() {
            let ok = match item {
                Pending::Point(p, img) => self.set_point(p, img),
                Pending::Line(l, img) => self.set_line(l, img),
            };
            if !ok {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn set_point(&mut self, p: usize, img: usize) -> bool {
        if self.pmap[p] != UNMAPPED {
            return self.pmap[p] == img;
        }
        if self.pused.contains(img) {
            return false;
        }
        // mapped lines through p must be exactly the used lines through img
        let through = self.src.pencil(p).intersection(self.lmapped);
        let mut images = PointSet::EMPTY;
        for l in through.iter() {
            images.insert(self.lmap[l]);
        }
        if images != self.dst.pencil(img).intersection(self.lused) {
            return false;
        }
        self.pmap[p] = img;
        self.pmapped.insert(p);
        self.pused.insert(img);
        self.trail.push(Undo::Point(p));
        for l in self.src.pencil(p).difference(self.lmapped).iter() {
            let mut others = self.src.line(l).intersection(self.pmapped);
            others.remove(p);
            if let Some(p2) = others.first() {
                let target = self.dst.join(img, self.pmap[p2]);
                self.queue.push(Pending::Line(l, target));
            }
        }
        true
    }

    fn set_line(&mut self, l: usize, img: usize) -> bool {
        if self.lmap[l] != UNMAPPED {
            return self.lmap[l] == img;
        }
        if self.lused.contains(img) {
            return false;
        }
        let on = self.src.line(l).intersection(self.pmapped);
        let mut images = PointSet::EMPTY;
        for p in on.iter() {
            images.insert(self.pmap[p]);
        }
        if images != self.dst.line(img).intersection(self.pused) {
            return false;
        }
        self.lmap[l] = img;
        self.lmapped.insert(l);
        self.lused.insert(img);
        self.trail.push(Undo::Line(l));
        for p in self.src.line(l).difference(self.pmapped).iter() {
            let mut others = self.src.pencil(p).intersection(self.lmapped);
            others.remove(l);
            if let Some(l2) = others.first() {
                let target = self.dst.meet(img, self.lmap[l2]);
                self.queue.push(Pending::Point(p, target));
            }
        }
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Point(p) => {
                    self.pused.remove(self.pmap[p]);
                    self.pmapped.remove(p);
                    self.pmap[p] = UNMAPPED;
                }
                Undo::Line(l) => {
                    self.lused.remove(self.lmap[l]);
                    self.lmapped.remove(l);
                    self.lmap[l] = UNMAPPED;
                }
            }
        }
    }
}

/// A quadrangle generating as much of the plane as a bounded scan can find.
/// Once it is mapped, propagation fixes every point it generates, so a
/// generating quadrangle leaves nothing to branch on.
fn generating_quadrangle(plane: &ProjectivePlane) -> Vec<usize> {
    const BUDGET: usize = 4096;
    let n = plane.n();
    if n < 4 {
        return Vec::new();
    }
    let mut best: Option<(usize, [usize; 4])> = None;
    let mut tried = 0;
    'outer: for a in 0..n {
        for b in (a + 1)..n {
            let ab = plane.join(a, b);
            for c in (b + 1)..n {
                if plane.incident(c, ab) {
                    continue;
                }
                let (ac, bc) = (plane.join(a, c), plane.join(b, c));
                for d in (c + 1)..n {
                    if plane.incident(d, ab) || plane.incident(d, ac) || plane.incident(d, bc) {
                        continue;
                    }
                    let size = plane.closure(&[a, b, c, d]).0.len();
                    if best.is_none_or(|(s, _)| size > s) {
                        best = Some((size, [a, b, c, d]));
                    }
                    tried += 1;
                    if size == n || tried >= BUDGET {
                        break 'outer;
                    }
                }
            }
        }
    }
    best.map(|(_, q)| q.to_vec()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_automorphisms_count() {
        let fano = ProjectivePlane::difference_set(2).unwrap();
        let mut count = 0;
        IsomorphismSearch::new(&fano, &fano).for_each(|_, _| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 168);
    }

    #[test]
    fn contradictory_constraints_yield_nothing() {
        let fano = ProjectivePlane::difference_set(2).unwrap();
        let mut s = IsomorphismSearch::new(&fano, &fano);
        assert!(s.fix_point(0, 0));
        assert!(!s.fix_point(1, 0));
        let mut count = 0;
        s.for_each(|_, _| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 0);
    }

    #[test]
    fn order_mismatch_is_empty() {
        let a = ProjectivePlane::difference_set(2).unwrap();
        let b = ProjectivePlane::difference_set(3).unwrap();
        let mut count = 0;
        IsomorphismSearch::new(&a, &b).for_each(|_, _| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 0);
    }
}
