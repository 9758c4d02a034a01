//! Heaps of pieces (dimers and vertical segments) with gravity to the left:
//! normal forms, maximal/minimal pieces, the path and sequence bijections,
//! trivial-heap generating functions, the inversion (master) formula, and the
//! parallelogram-polyomino statistics dictionary.

use crate::altseq::AltSeq;
use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, VarId, XPoly, XRatFunc};
use crate::paths::{Step, UpDownPath};
use std::collections::BTreeSet;

/// A piece: a dimer occupying [y, y+1] or a segment occupying [lo, hi].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Piece {
    /// Dimer d_y, occupying the closed interval [y, y+1], y >= 0.
    Dimer(i64),
    /// Segment hi–lo with 1 <= lo <= hi, occupying [lo, hi].
    Segment {
        /// Lower endpoint.
        lo: i64,
        /// Upper endpoint.
        hi: i64,
    },
}

impl Piece {
    /// Lower level of the occupied interval.
    pub fn lo(&self) -> i64 {
        match *self {
            Piece::Dimer(y) => y,
            Piece::Segment { lo, .. } => lo,
        }
    }

    /// Upper level of the occupied interval.
    pub fn hi(&self) -> i64 {
        match *self {
            Piece::Dimer(y) => y + 1,
            Piece::Segment { hi, .. } => hi,
        }
    }

    /// Two pieces commute when they do not block each other: dimers d_i, d_j
    /// iff i > j+1 or j > i+1; segments iff their intervals are disjoint.
    pub fn commutes(&self, other: &Piece) -> bool {
        match (self, other) {
            (Piece::Dimer(i), Piece::Dimer(j)) => *i > j + 1 || *j > i + 1,
            (Piece::Segment { lo: l1, hi: h1 }, Piece::Segment { lo: l2, hi: h2 }) => {
                l1 > h2 || l2 > h1
            }
            _ => panic!("heaps are homogeneous in piece kind"),
        }
    }

    /// The symbolic weight: B_{y+1} for a dimer d_y, V_lo · A_hi for a
    /// segment.
    pub fn weight(&self) -> MultiPoly {
        match *self {
            Piece::Dimer(y) => MultiPoly::var(VarId::b(y as u32 + 1)),
            Piece::Segment { lo, hi } => {
                MultiPoly::var(VarId::v(lo as u32)).mul(&MultiPoly::var(VarId::a(hi as u32)))
            }
        }
    }
}

/// A heap of pieces, stored as the pile sequence (earlier pieces were
/// dropped first). Equality compares the gravity-left normal form, so any
/// two pile orders of the same Cartier–Foata trace are equal.
#[derive(Debug, Clone)]
pub struct Heap {
    pieces: Vec<Piece>,
}

impl Heap {
    /// Builds a heap from a pile sequence.
    pub fn new(pieces: Vec<Piece>) -> Self {
        Heap { pieces }
    }

    /// The empty heap.
    pub fn empty() -> Self {
        Heap { pieces: vec![] }
    }

    /// Number of pieces.
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    /// True for the empty heap.
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The pile sequence.
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Product of the piece weights.
    pub fn weight(&self) -> MultiPoly {
        self.pieces.iter().fold(MultiPoly::one(), |acc, p| acc.mul(&p.weight()))
    }

    /// Gravity-left column of each piece (by pile index): a piece rests one
    /// column to the right of the right-most earlier piece that blocks it.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols = Vec::with_capacity(self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate() {
            let mut col = 0usize;
            for j in 0..i {
                if !p.commutes(&self.pieces[j]) {
                    col = col.max(cols[j] + 1);
                }
            }
            cols.push(col);
        }
        cols
    }

    /// Canonical normal form: pieces grouped by column, each column sorted.
    pub fn normal_form(&self) -> Vec<Vec<Piece>> {
        let cols = self.columns();
        let ncols = cols.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); ncols];
        for (i, &c) in cols.iter().enumerate() {
            out[c].push(self.pieces[i]);
        }
        for col in &mut out {
            col.sort();
        }
        out
    }

    /// Indices of pieces transitively above piece `i` (blocked chains with
    /// strictly increasing columns).
    fn above_set(&self, i: usize) -> BTreeSet<usize> {
        let cols = self.columns();
        let mut set = BTreeSet::new();
        let mut frontier = vec![i];
        while let Some(m) = frontier.pop() {
            for j in 0..self.pieces.len() {
                if j != i
                    && !set.contains(&j)
                    && !self.pieces[j].commutes(&self.pieces[m])
                    && cols[j] > cols[m]
                {
                    set.insert(j);
                    frontier.push(j);
                }
            }
        }
        set
    }

    /// Indices of pieces transitively below piece `i`.
    fn below_set(&self, i: usize) -> BTreeSet<usize> {
        let cols = self.columns();
        let mut set = BTreeSet::new();
        let mut frontier = vec![i];
        while let Some(m) = frontier.pop() {
            for j in 0..self.pieces.len() {
                if j != i
                    && !set.contains(&j)
                    && !self.pieces[j].commutes(&self.pieces[m])
                    && cols[j] < cols[m]
                {
                    set.insert(j);
                    frontier.push(j);
                }
            }
        }
        set
    }

    /// Pile indices of the maximal pieces (removable to the far right).
    pub fn maximal_indices(&self) -> Vec<usize> {
        let cols = self.columns();
        (0..self.pieces.len())
            .filter(|&i| {
                !(0..self.pieces.len()).any(|j| {
                    j != i && !self.pieces[i].commutes(&self.pieces[j]) && cols[j] > cols[i]
                })
            })
            .collect()
    }

    /// Pile indices of the minimal pieces (removable to the far left).
    pub fn minimal_indices(&self) -> Vec<usize> {
        let cols = self.columns();
        (0..self.pieces.len()).filter(|&i| cols[i] == 0).collect()
    }

    /// Removes the piece at a pile index.
    pub fn remove(&mut self, i: usize) -> Piece {
        self.pieces.remove(i)
    }

    /// Deterministic column diagram, one line per level from top to bottom.
    pub fn render(&self) -> String {
        if self.pieces.is_empty() {
            return "(empty heap)".into();
        }
        let cols = self.columns();
        let ncols = cols.iter().max().unwrap() + 1;
        let top = self.pieces.iter().map(|p| p.hi()).max().unwrap();
        let bot = self.pieces.iter().map(|p| p.lo()).min().unwrap();
        let mut lines = Vec::new();
        for level in (bot..=top).rev() {
            let mut line = format!("{level:>3} ");
            for c in 0..ncols {
                let occupied = self
                    .pieces
                    .iter()
                    .enumerate()
                    .any(|(i, p)| cols[i] == c && p.lo() <= level && level <= p.hi());
                line.push(if occupied { '|' } else { '.' });
                line.push(' ');
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl PartialEq for Heap {
    fn eq(&self, other: &Self) -> bool {
        self.normal_form() == other.normal_form()
    }
}
impl Eq for Heap {}

/// A heap together with a marked starting level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedHeap {
    /// The underlying heap.
    pub heap: Heap,
    /// The marked starting level r.
    pub mark: i64,
}

impl MarkedHeap {
    /// Weight: V_mark times the heap weight.
    pub fn weight(&self) -> MultiPoly {
        MultiPoly::var(VarId::v(self.mark as u32)).mul(&self.heap.weight())
    }
}

// ---------------------------------------------------------------------------
// Piece universes
// ---------------------------------------------------------------------------

/// All dimers on [0, k]: d_0, ..., d_{k-1}.
pub fn dimers_on(k: i64) -> Vec<Piece> {
    (0..k).map(Piece::Dimer).collect()
}

/// All segments inside a union of closed level intervals; empty or reversed
/// intervals contribute nothing.
pub fn segments_on(intervals: &[(i64, i64)]) -> Vec<Piece> {
    let mut out = Vec::new();
    for &(a, b) in intervals {
        for lo in a.max(1)..=b {
            for hi in lo..=b {
                out.push(Piece::Segment { lo, hi });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Path <-> dimer-heap bijection
// ---------------------------------------------------------------------------

/// Converts a bounded up-down path from r to s (r <= s) into its heap of
/// dimers: scanning left to right, a down-step from h+1 to h at or above the
/// start level emits d_h, and an up-step from h below the start level emits
/// d_h.
pub fn path_to_dimer_heap(p: &UpDownPath, k: i64, r: i64, s: i64) -> Result<Heap> {
    if r > s || !p.within(k) || p.start != r || p.end() != s {
        return Err(Error::ConstraintViolation(format!(
            "path must run from {r} to {s} within [0, {k}] with r <= s"
        )));
    }
    let mut pieces = Vec::new();
    let mut h = p.start;
    for st in &p.steps {
        match st {
            Step::Up => {
                if h < r {
                    pieces.push(Piece::Dimer(h));
                }
                h += 1;
            }
            Step::Down => {
                h -= 1;
                if h >= r {
                    pieces.push(Piece::Dimer(h));
                }
            }
            Step::Level => {
                return Err(Error::ConstraintViolation("level steps are not supported".into()))
            }
        }
    }
    Ok(Heap::new(pieces))
}

/// Monotone run of steps from height a to height b.
fn monotone(a: i64, b: i64) -> Vec<Step> {
    if b >= a {
        vec![Step::Up; (b - a) as usize]
    } else {
        vec![Step::Down; (a - b) as usize]
    }
}

/// Inverse of [`path_to_dimer_heap`]: rebuilds the path back to front by
/// repeatedly removing the top-most maximal dimer.
pub fn dimer_heap_to_path(h: &Heap, k: i64, r: i64, s: i64) -> Result<UpDownPath> {
    if r > s {
        return Err(Error::ConstraintViolation("need r <= s".into()));
    }
    if h.pieces().iter().any(|p| p.lo() < 0 || p.hi() > k) {
        return Err(Error::BoundViolation(format!("heap does not fit in [0, {k}]")));
    }
    let mut heap = h.clone();
    // Steps of the already-built suffix, stored in reverse order; `cur` is
    // the height at which the suffix currently begins.
    let mut rev_steps: Vec<Step> = Vec::new();
    let mut cur = s;
    let prepend = |frag: Vec<Step>, rev_steps: &mut Vec<Step>| {
        for st in frag.into_iter().rev() {
            rev_steps.push(st);
        }
    };
    while !heap.is_empty() {
        let maxima = heap.maximal_indices();
        let &top = maxima
            .iter()
            .max_by_key(|&&i| heap.pieces()[i].lo())
            .expect("nonempty heap has a maximal piece");
        let y = match heap.pieces()[top] {
            Piece::Dimer(y) => y,
            _ => return Err(Error::ConstraintViolation("expected a heap of dimers".into())),
        };
        if y >= r {
            // Down-step from y+1 to y, then connect y to cur.
            let mut frag = vec![Step::Down];
            frag.extend(monotone(y, cur));
            prepend(frag, &mut rev_steps);
            cur = y + 1;
            heap.remove(top);
        } else {
            // y == r-1: extract the subheap dragged along when this dimer is
            // pushed left — pieces below it that lie strictly below level r,
            // with no other copy of d_{r-1} in between.
            let below = heap.below_set(top);
            let mut blocked: BTreeSet<usize> = BTreeSet::new();
            for &j in &below {
                if heap.pieces()[j] == Piece::Dimer(r - 1) {
                    blocked.insert(j);
                    blocked.extend(heap.below_set(j));
                }
            }
            let mut sub: Vec<Piece> = Vec::new();
            let mut sub_idx: Vec<usize> = Vec::new();
            sub.push(heap.pieces()[top]);
            sub_idx.push(top);
            for &j in &below {
                if heap.pieces()[j].hi() <= r && !blocked.contains(&j) {
                    sub.push(heap.pieces()[j]);
                    sub_idx.push(j);
                }
            }
            sub_idx.sort_unstable();
            // Process the subheap: first the d_{r-1} itself (an up-step into
            // level r), then repeatedly its top-most maximal dimer (an
            // up-step from its level).
            let mut frag = vec![Step::Up];
            frag.extend(monotone(r, cur));
            prepend(frag, &mut rev_steps);
            cur = r - 1;
            let mut g = Heap::new(sub[1..].to_vec());
            while !g.is_empty() {
                // Rebuilding a below-level portion back to front: the next
                // emission is the lowest maximal dimer reachable by a
                // monotone descent, i.e. with level >= cur - 1.
                let maxima = g.maximal_indices();
                let &m = maxima
                    .iter()
                    .filter(|&&i| g.pieces()[i].lo() >= cur - 1)
                    .min_by_key(|&&i| g.pieces()[i].lo())
                    .expect("nonempty subheap has a reachable maximal dimer");
                let j = match g.pieces()[m] {
                    Piece::Dimer(j) => j,
                    _ => unreachable!(),
                };
                let mut frag = vec![Step::Up];
                frag.extend(monotone(j + 1, cur));
                prepend(frag, &mut rev_steps);
                cur = j;
                g.remove(m);
            }
            // Remove exactly the occurrences that formed the subheap.
            for i in sub_idx.into_iter().rev() {
                heap.remove(i);
            }
        }
    }
    let mut steps = monotone(r, cur);
    steps.extend(rev_steps.into_iter().rev());
    Ok(UpDownPath { start: r, steps })
}

// ---------------------------------------------------------------------------
// Alternating sequence <-> segment-heap bijections
// ---------------------------------------------------------------------------

/// The consecutive pairs (hi, lo) = (a_2, a_3), (a_4, a_5), ...,
/// (a_{2n}, a_{2n+1}) of an odd-length alternating sequence.
fn sequence_pairs(a: &AltSeq) -> Result<Vec<(i64, i64)>> {
    let e = &a.entries;
    if e.len() % 2 == 0 {
        return Err(Error::ConstraintViolation("need an odd-length sequence".into()));
    }
    Ok((1..e.len()).step_by(2).map(|i| (e[i], e[i + 1])).collect())
}

/// Direct pile-up form: stacks the segments a_2–a_3, a_4–a_5, ...,
/// a_{2n}–a_{2n+1} in order, marking the first entry.
pub fn altseq_to_segment_heap(a: &AltSeq, k: i64) -> Result<MarkedHeap> {
    if !a.valid(k) {
        return Err(Error::ConstraintViolation("invalid alternating sequence".into()));
    }
    let pieces = sequence_pairs(a)?
        .into_iter()
        .map(|(hi, lo)| Piece::Segment { lo, hi })
        .collect();
    Ok(MarkedHeap { heap: Heap::new(pieces), mark: a.entries[0] })
}

/// Inverse of [`altseq_to_segment_heap`]: repeatedly pops the top-most
/// maximal segment, whose endpoints are the last two remaining entries.
pub fn segment_heap_to_altseq(mh: &MarkedHeap) -> Result<AltSeq> {
    let mut heap = mh.heap.clone();
    let mut popped: Vec<(i64, i64)> = Vec::new();
    while !heap.is_empty() {
        let maxima = heap.maximal_indices();
        let &top = maxima
            .iter()
            .max_by_key(|&&i| heap.pieces()[i].lo())
            .expect("nonempty heap");
        let p = heap.remove(top);
        match p {
            Piece::Segment { lo, hi } => popped.push((hi, lo)),
            _ => return Err(Error::ConstraintViolation("expected a heap of segments".into())),
        }
    }
    let mut entries = vec![mh.mark];
    for (hi, lo) in popped.into_iter().rev() {
        entries.push(hi);
        entries.push(lo);
    }
    Ok(AltSeq { entries })
}

/// Reordered pile-up form: blocks of pairs dipping below the start level are
/// reversed before stacking, so that no maximal segment ends up inside
/// [1, r-1].
pub fn altseq_to_reordered_heap(a: &AltSeq, k: i64) -> Result<MarkedHeap> {
    if !a.valid(k) {
        return Err(Error::ConstraintViolation("invalid alternating sequence".into()));
    }
    let r = a.entries[0];
    let pairs = sequence_pairs(a)?;
    let n = pairs.len();
    let mut s_order: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut l = 0usize;
    while l < n {
        if pairs[l].1 >= r {
            s_order.push(pairs[l]);
            l += 1;
        } else {
            // Scan forward to the next pair whose upper endpoint returns to
            // at least r, and append the skipped block in reverse.
            let mut j = l + 1;
            while j < n && pairs[j].0 < r {
                j += 1;
            }
            for t in (l..j).rev() {
                s_order.push(pairs[t]);
            }
            l = j;
        }
    }
    let pieces = s_order.into_iter().map(|(hi, lo)| Piece::Segment { lo, hi }).collect();
    Ok(MarkedHeap { heap: Heap::new(pieces), mark: r })
}

/// Inverse of [`altseq_to_reordered_heap`]: extracts subheaps from the
/// top-most minimal segment downward (reflecting blocks dragged to a common
/// obstruction), then applies the plain inverse.
pub fn reordered_heap_to_altseq(mh: &MarkedHeap) -> Result<AltSeq> {
    let r = mh.mark;
    let mut hp = mh.heap.clone();
    let mut out: Vec<Piece> = Vec::new();
    while !hp.is_empty() {
        let minima = hp.minimal_indices();
        let &alpha = minima
            .iter()
            .max_by_key(|&&i| hp.pieces()[i].lo())
            .expect("nonempty heap has a minimal piece");
        if hp.pieces()[alpha].hi() >= r {
            out.push(hp.remove(alpha));
            continue;
        }
        // alpha lies inside [1, r-1]: push it right; the left-most dragged
        // piece reaching level r is the obstruction omega.
        let cols = hp.columns();
        let above = hp.above_set(alpha);
        let omega = *above
            .iter()
            .filter(|&&j| hp.pieces()[j].hi() >= r)
            .min_by_key(|&&j| (cols[j], hp.pieces()[j].lo()))
            .ok_or_else(|| {
                Error::ConstraintViolation("no obstruction above a low minimal segment".into())
            })?;
        let mut g: BTreeSet<usize> = BTreeSet::new();
        g.insert(alpha);
        g.insert(omega);
        let below_omega = hp.below_set(omega);
        for &j in above.intersection(&below_omega) {
            g.insert(j);
        }
        // Further minimal segments, from top down, that drag the same
        // obstruction join the subheap.
        let mut lower: Vec<usize> = minima
            .iter()
            .copied()
            .filter(|&i| i != alpha && hp.pieces()[i].lo() < hp.pieces()[alpha].lo())
            .collect();
        lower.sort_by_key(|&i| std::cmp::Reverse(hp.pieces()[i].lo()));
        for beta in lower {
            let above_b = hp.above_set(beta);
            let omega_b = above_b
                .iter()
                .copied()
                .filter(|&j| hp.pieces()[j].hi() >= r)
                .min_by_key(|&j| (cols[j], hp.pieces()[j].lo()));
            if omega_b != Some(omega) {
                break;
            }
            g.insert(beta);
            for &j in above_b.intersection(&below_omega) {
                g.insert(j);
            }
        }
        // Remove the subheap in pile order and append it reflected.
        let mut extracted: Vec<Piece> = Vec::new();
        let mut remaining: Vec<Piece> = Vec::new();
        for (i, &p) in hp.pieces().iter().enumerate() {
            if g.contains(&i) {
                extracted.push(p);
            } else {
                remaining.push(p);
            }
        }
        extracted.reverse();
        out.extend(extracted);
        hp = Heap::new(remaining);
    }
    segment_heap_to_altseq(&MarkedHeap { heap: Heap::new(out), mark: r })
}

// ---------------------------------------------------------------------------
// Trivial heaps and the master formula
// ---------------------------------------------------------------------------

/// All nonempty pairwise-commuting subsets of a distinct piece list.
fn antichains(types: &[Piece]) -> Vec<Vec<Piece>> {
    let mut out: Vec<Vec<Piece>> = vec![vec![]];
    for &p in types {
        let mut grown = Vec::new();
        for set in &out {
            if set.iter().all(|q| q.commutes(&p)) {
                let mut s = set.clone();
                s.push(p);
                grown.push(s);
            }
        }
        out.extend(grown);
    }
    out.retain(|s| !s.is_empty());
    out
}

/// Signed trivial-heap generating function over a piece universe: the sum of
/// (-1)^{|T|} w(T) x^{2|T|} over all antichains T, with symbolic piece
/// weights when `weighted` is set.
pub fn trivial_heap_gf(types: &[Piece], weighted: bool) -> XPoly {
    let mut coeffs = vec![MultiPoly::zero(); 2 * types.len() + 1];
    coeffs[0] = MultiPoly::one();
    for t in antichains(types) {
        let mut w = if t.len() % 2 == 0 { MultiPoly::one() } else { MultiPoly::int(-1) };
        if weighted {
            for p in &t {
                w = w.mul(&p.weight());
            }
        }
        coeffs[2 * t.len()] = coeffs[2 * t.len()].add(&w);
    }
    XPoly::new(coeffs)
}

/// All heaps over a piece universe with at most `max_pieces` pieces,
/// enumerated by their column normal forms.
pub fn enumerate_heaps(types: &[Piece], max_pieces: usize) -> Vec<Heap> {
    let anti = antichains(types);
    let mut out = vec![Heap::empty()];
    fn rec(
        anti: &[Vec<Piece>],
        cur: &[Piece],
        last: &[Piece],
        budget: usize,
        out: &mut Vec<Heap>,
    ) {
        for col in anti {
            if col.len() > budget {
                continue;
            }
            // Every piece of the new column must rest on the previous one.
            if !last.is_empty() && !col.iter().all(|p| last.iter().any(|q| !q.commutes(p))) {
                continue;
            }
            if last.is_empty() && !cur.is_empty() {
                continue;
            }
            let mut pieces = cur.to_vec();
            pieces.extend(col.iter().copied());
            out.push(Heap::new(pieces.clone()));
            rec(anti, &pieces, col, budget - col.len(), out);
        }
    }
    rec(&anti, &[], &[], max_pieces, &mut out);
    out
}

/// Result of a master-formula check: weighted heap sums by piece count
/// against the series of the trivial-heap quotient.
#[derive(Debug, Clone)]
pub struct MasterCheck {
    /// Brute sums, index = number of pieces.
    pub lhs: Vec<MultiPoly>,
    /// Series coefficients of the quotient at x^{2m}.
    pub rhs: Vec<MultiPoly>,
    /// Exact agreement.
    pub ok: bool,
}

/// Verifies the inversion formula: the generating function of heaps whose
/// maximal pieces lie in `allowed_max` equals the quotient of signed
/// trivial-heap sums, as a series identity up to `cutoff` pieces.
pub fn heap_master_check(
    types: &[Piece],
    allowed_max: &[Piece],
    weighted: bool,
    cutoff: usize,
) -> MasterCheck {
    let mut lhs = vec![MultiPoly::zero(); cutoff + 1];
    for h in enumerate_heaps(types, cutoff) {
        let ok = h
            .maximal_indices()
            .into_iter()
            .all(|i| allowed_max.contains(&h.pieces()[i]));
        if ok {
            let w = if weighted { h.weight() } else { MultiPoly::one() };
            lhs[h.len()] = lhs[h.len()].add(&w);
        }
    }
    let forbidden: Vec<Piece> =
        types.iter().copied().filter(|p| !allowed_max.contains(p)).collect();
    let f = XRatFunc::new(
        trivial_heap_gf(&forbidden, weighted),
        trivial_heap_gf(types, weighted),
    )
    .expect("trivial-heap gf has constant term 1");
    let ser = f.series(2 * cutoff);
    let rhs: Vec<MultiPoly> = (0..=cutoff).map(|m| ser.coeff(2 * m)).collect();
    let ok = lhs == rhs;
    MasterCheck { lhs, rhs, ok }
}

// ---------------------------------------------------------------------------
// Parallelogram polyominoes
// ---------------------------------------------------------------------------

/// Gaussian binomial coefficient as a polynomial in q; zero when out of
/// range.
pub fn q_binomial(n: i64, k: i64) -> MultiPoly {
    if k < 0 || n < 0 || k > n {
        return MultiPoly::zero();
    }
    // Pascal recurrence [n, k] = [n-1, k-1] + q^k [n-1, k].
    let mut row = vec![MultiPoly::one()]; // n = 0
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let a = if j >= 1 { row.get(j as usize - 1).cloned() } else { None };
            let b = row.get(j as usize).map(|p| {
                p.mul(&MultiPoly::term(
                    crate::multipoly::Mono::var(VarId::q(), j),
                    crate::exact::rat(1),
                ))
            });
            let v = match (a, b) {
                (Some(a), Some(b)) => a.add(&b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => MultiPoly::zero(),
            };
            next.push(v);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Statistics of the parallelogram polyomino encoded by a heap of segments
/// with a unique maximal segment reaching down to level 1: (width, height,
/// area) = (piece count, 1 + sum of segment lengths, sum of upper levels).
pub fn heap_to_polyomino_stats(h: &Heap) -> Result<(u64, u64, u64)> {
    let maxima = h.maximal_indices();
    if maxima.len() != 1 || h.pieces()[maxima[0]].lo() != 1 {
        return Err(Error::NotPolyomino(
            "need a unique maximal segment with lower endpoint 1".into(),
        ));
    }
    let width = h.len() as u64;
    let mut height = 1u64;
    let mut area = 0u64;
    for p in h.pieces() {
        match *p {
            Piece::Segment { lo, hi } => {
                height += (hi - lo) as u64;
                area += hi as u64;
            }
            _ => return Err(Error::NotPolyomino("expected segments".into())),
        }
    }
    Ok((width, height, area))
}

/// Closed generating function for parallelogram polyominoes with column
/// lengths at most k, summing q^{area} y^{height} x^{2 width}.
pub fn polyomino_gf_closed(k: i64) -> XRatFunc {
    assert!(k >= 1);
    let qy = |e: i64| {
        MultiPoly::term(
            crate::multipoly::Mono::from_pairs(vec![(VarId::y(), e), (VarId::q(), e)]),
            crate::exact::rat(1),
        )
    };
    let mut num = vec![MultiPoly::zero(); 2 * k as usize + 1];
    let mut den = vec![MultiPoly::zero(); 2 * k as usize + 1];
    den[0] = MultiPoly::one();
    for j in 1..=k {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let qpow = MultiPoly::term(
            crate::multipoly::Mono::var(VarId::q(), j * (j + 1) / 2),
            crate::exact::rat(sign),
        );
        let mut num_i = MultiPoly::zero();
        let mut den_i = MultiPoly::zero();
        for i in 0..=(k - j) {
            let common = qy(i).mul(&q_binomial(i + j - 1, j - 1));
            num_i = num_i.add(&common.mul(&q_binomial(k - i - 1, j - 1)));
            den_i = den_i.add(&common.mul(&q_binomial(k - i, j)));
        }
        num[2 * j as usize] = qpow.mul(&num_i);
        den[2 * j as usize] = qpow.mul(&den_i);
    }
    let y = MultiPoly::var(VarId::y());
    let num = XPoly::new(num).scale(&y.neg());
    XRatFunc::new(num, XPoly::new(den)).expect("denominator constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altseq::enumerate_altseq;
    use crate::exact::rat;
    use crate::orthopoly::{chebyshev_u_half, chebyshev_u_rev, lift, poly_q};
    use crate::paths::{count_paths, enumerate_paths, poly_p_rev};

    #[test]
    fn maximal_minimal_basics() {
        let h = Heap::empty();
        assert!(h.maximal_indices().is_empty());
        let h = Heap::new(vec![Piece::Dimer(0), Piece::Dimer(1)]);
        assert_eq!(h.maximal_indices(), vec![1]);
        assert_eq!(h.minimal_indices(), vec![0]);
    }

    #[test]
    fn normal_form_invariance() {
        // Swapping adjacent commuting pieces leaves the heap unchanged.
        let a = Heap::new(vec![Piece::Dimer(0), Piece::Dimer(3), Piece::Dimer(1)]);
        let b = Heap::new(vec![Piece::Dimer(3), Piece::Dimer(0), Piece::Dimer(1)]);
        assert_eq!(a, b);
        let c = Heap::new(vec![Piece::Dimer(1), Piece::Dimer(0), Piece::Dimer(3)]);
        assert_ne!(a, c);
    }

    #[test]
    fn path_heap_tiny() {
        // UD at r=s=0 gives the single dimer d_0; UU (0 -> 2) gives nothing.
        let p = UpDownPath { start: 0, steps: vec![Step::Up, Step::Down] };
        let h = path_to_dimer_heap(&p, 2, 0, 0).unwrap();
        assert_eq!(h.pieces(), &[Piece::Dimer(0)]);
        let p = UpDownPath { start: 0, steps: vec![Step::Up, Step::Up] };
        let h = path_to_dimer_heap(&p, 2, 0, 2).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn path_heap_roundtrip() {
        for n in 0..=10u64 {
            for k in 0..=4i64 {
                for r in 0..=k {
                    for s in r..=k {
                        if (n as i64 + r + s) % 2 != 0 {
                            continue;
                        }
                        for p in enumerate_paths(n, k, r, s, false).unwrap() {
                            let h = path_to_dimer_heap(&p, k, r, s).unwrap();
                            assert_eq!(2 * h.len() as i64, n as i64 - (s - r), "piece count");
                            let back = dimer_heap_to_path(&h, k, r, s).unwrap();
                            assert_eq!(back, p, "n={n} k={k} r={r} s={s}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn altseq_heap_roundtrip_and_weights() {
        for n in 0..=4u64 {
            for k in 1..=4i64 {
                for r in 1..=k {
                    for s in 1..=k {
                        for a in enumerate_altseq(2 * n + 1, k, r, s).unwrap() {
                            let mh = altseq_to_segment_heap(&a, k).unwrap();
                            assert_eq!(mh.weight(), a.weight(), "weight preserved");
                            let back = segment_heap_to_altseq(&mh).unwrap();
                            assert_eq!(back, a, "plain inverse");
                            let mh2 = altseq_to_reordered_heap(&a, k).unwrap();
                            assert_eq!(mh2.weight(), a.weight());
                            // Reordered image for r <= s: no maximal segment
                            // inside [1, r-1] or [s+1, k]; top-most ends at s.
                            if r <= s {
                                let maxima = mh2.heap.maximal_indices();
                                for &i in &maxima {
                                    let p = mh2.heap.pieces()[i];
                                    assert!(
                                        !(p.hi() < r || p.lo() > s),
                                        "forbidden maximal {p:?}: n={n} k={k} r={r} s={s} a={:?}",
                                        a.entries
                                    );
                                }
                                if !mh2.heap.is_empty() {
                                    let &top = maxima
                                        .iter()
                                        .max_by_key(|&&i| mh2.heap.pieces()[i].lo())
                                        .unwrap();
                                    assert_eq!(mh2.heap.pieces()[top].lo(), s);
                                }
                            }
                            let back2 = reordered_heap_to_altseq(&mh2).unwrap();
                            assert_eq!(back2, a, "reordered inverse");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn figure_sequence_oracle() {
        // The 29-entry worked example: its heap has two copies of segment
        // 3-2, and the reordered heap is a rearrangement of the same pieces.
        let entries = vec![
            4, 4, 3, 3, 1, 1, 1, 3, 2, 6, 6, 8, 4, 7, 4, 4, 2, 3, 2, 2, 2, 5, 5, 6, 3, 6, 5, 8, 6,
        ];
        let a = AltSeq { entries };
        assert!(a.valid(8));
        let mh = altseq_to_segment_heap(&a, 8).unwrap();
        let copies = mh
            .heap
            .pieces()
            .iter()
            .filter(|&&p| p == Piece::Segment { lo: 2, hi: 3 })
            .count();
        assert_eq!(copies, 2);
        // The reordered pile sequence from the worked example.
        let expect: Vec<Piece> = [
            (2, 3),
            (1, 1),
            (1, 3),
            (3, 4),
            (6, 6),
            (4, 8),
            (4, 7),
            (2, 2),
            (2, 3),
            (2, 4),
            (5, 5),
            (3, 6),
            (5, 6),
            (6, 8),
        ]
        .iter()
        .map(|&(lo, hi)| Piece::Segment { lo, hi })
        .collect();
        let mh2 = altseq_to_reordered_heap(&a, 8).unwrap();
        assert_eq!(mh2.heap.pieces(), &expect[..]);
        assert_eq!(reordered_heap_to_altseq(&mh2).unwrap(), a);
    }

    #[test]
    fn trivial_gf_closed_forms() {
        for k in 0..=5i64 {
            let dimers = trivial_heap_gf(&dimers_on(k), false);
            assert_eq!(dimers, lift(&chebyshev_u_rev(k + 1)), "dimers on [0,{k}]");
            let segs = trivial_heap_gf(&segments_on(&[(1, k)]), false);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(segs, lift(&chebyshev_u_half(2 * k).scale(&rat(sign))), "segments k={k}");
        }
        // Weighted versions.
        for k in 0..=4i64 {
            let segs = trivial_heap_gf(&segments_on(&[(1, k)]), true);
            let sign = MultiPoly::int(if k % 2 == 0 { 1 } else { -1 });
            assert_eq!(segs, poly_q(2 * k as u32).scale(&sign), "weighted segments k={k}");
            let dimers = trivial_heap_gf(&dimers_on(k), true);
            assert_eq!(dimers, poly_p_rev(k as u32 + 1), "weighted dimers k={k}");
        }
    }

    #[test]
    fn interval_sum_identity() {
        for k in 1..=5i64 {
            for r in 1..=k {
                for s in r..=k {
                    let mut acc = XPoly::zero();
                    for j in s..=k {
                        let gf = trivial_heap_gf(&segments_on(&[(1, r - 1), (j + 1, k)]), false);
                        acc = acc.add(&gf.shift_up(2));
                    }
                    let sign = if (k + r + s + 1) % 2 == 0 { 1 } else { -1 };
                    let expect = chebyshev_u_half(2 * r - 2)
                        .mul(&chebyshev_u_half(2 * k + 1 - 2 * s))
                        .scale(&rat(sign));
                    assert_eq!(acc, lift(&expect).shift_up(1), "k={k} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn master_formula_dimers() {
        let cutoff = 5usize;
        for k in 1..=3i64 {
            for r in 0..=k {
                for s in r..=k {
                    let types = dimers_on(k);
                    let allowed: Vec<Piece> =
                        ((r - 1).max(0)..=s.min(k - 1)).map(Piece::Dimer).collect();
                    let chk = heap_master_check(&types, &allowed, false, cutoff);
                    assert!(chk.ok, "dimer master k={k} r={r} s={s}");
                    // Cross-check against path counts: heaps with m pieces
                    // correspond to paths of length 2m + (s - r).
                    for m in 0..=cutoff {
                        let n = 2 * m as u64 + (s - r) as u64;
                        assert_eq!(
                            chk.lhs[m].constant_term(),
                            num::BigRational::from_integer(count_paths(n, k, r, s).unwrap()),
                            "k={k} r={r} s={s} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn master_formula_segments() {
        let cutoff = 4usize;
        for k in 1..=3i64 {
            for r in 1..=k {
                for s in r..=k {
                    let types = segments_on(&[(1, k)]);
                    let forbidden = segments_on(&[(1, r - 1), (s + 1, k)]);
                    let allowed: Vec<Piece> =
                        types.iter().copied().filter(|p| !forbidden.contains(p)).collect();
                    let chk = heap_master_check(&types, &allowed, false, cutoff);
                    assert!(chk.ok, "segment master k={k} r={r} s={s}");
                    // Heaps of m segments with these maxima correspond to
                    // even-length sequences of length 2m + 2 from r to s.
                    for m in 0..=cutoff {
                        assert_eq!(
                            chk.lhs[m].constant_term(),
                            num::BigRational::from_integer(
                                crate::altseq::count_altseq(2 * m as u64 + 2, k, r, s).unwrap()
                            ),
                            "k={k} r={r} s={s} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn q_binomial_basics() {
        let expect = (0..=4)
            .map(|e| {
                MultiPoly::term(
                    crate::multipoly::Mono::var(VarId::q(), e),
                    rat(if e == 2 { 2 } else { 1 }),
                )
            })
            .fold(MultiPoly::zero(), |acc, t| acc.add(&t));
        assert_eq!(q_binomial(4, 2), expect);
        assert_eq!(q_binomial(3, 0), MultiPoly::one());
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
    }

    #[test]
    fn polyomino_stats_and_gf() {
        // Unit cell.
        let h = Heap::new(vec![Piece::Segment { lo: 1, hi: 1 }]);
        assert_eq!(heap_to_polyomino_stats(&h).unwrap(), (1, 1, 1));
        // Brute sums vs the closed form.
        for k in 1..=3i64 {
            let gf = polyomino_gf_closed(k);
            let ser = gf.series(8);
            let mut brute = vec![MultiPoly::zero(); 5];
            for h in enumerate_heaps(&segments_on(&[(1, k)]), 4) {
                if let Ok((w, ht, a)) = heap_to_polyomino_stats(&h) {
                    let term = MultiPoly::term(
                        crate::multipoly::Mono::from_pairs(vec![
                            (VarId::q(), a as i64),
                            (VarId::y(), ht as i64),
                        ]),
                        rat(1),
                    );
                    brute[w as usize] = brute[w as usize].add(&term);
                }
            }
            for w in 0..=4usize {
                assert_eq!(ser.coeff(2 * w), brute[w], "k={k} width={w}");
                if w > 0 {
                    assert!(ser.coeff(2 * w - 1).is_zero());
                }
            }
            // Width-1 coefficient is the column sum.
            let mut col = MultiPoly::zero();
            for h in 1..=k {
                col = col.add(&MultiPoly::term(
                    crate::multipoly::Mono::from_pairs(vec![(VarId::q(), h), (VarId::y(), h)]),
                    rat(1),
                ));
            }
            assert_eq!(ser.coeff(2), col, "k={k}");
        }
    }

    #[test]
    fn polyomino_gf_stability() {
        // Terms of height <= k in the x^{2w} coefficient agree between
        // bounds k and k+1.
        for k in 1..=3i64 {
            let a = polyomino_gf_closed(k).series(8);
            let b = polyomino_gf_closed(k + 1).series(8);
            for w in 1..=4usize {
                let restrict = |p: &MultiPoly| {
                    MultiPoly::from_terms(p.terms().iter().cloned().filter(|(m, _)| {
                        m.pairs()
                            .iter()
                            .find(|(v, _)| *v == VarId::y())
                            .map(|&(_, e)| e <= k)
                            .unwrap_or(true)
                    }))
                };
                assert_eq!(
                    restrict(&a.coeff(2 * w)),
                    restrict(&b.coeff(2 * w)),
                    "k={k} width={w}"
                );
            }
        }
    }

    #[test]
    fn render_is_stable() {
        let h = Heap::new(vec![Piece::Dimer(0), Piece::Dimer(1)]);
        let r = h.render();
        assert_eq!(r, "  2 . |\n  1 | |\n  0 | .");
    }
}
