use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::Rng;
use smallvec::SmallVec;

use super::space::TermSpace;

/// A signed multiset of term ids; every entry is one copy.
pub(crate) type Multiset = Vec<(u32, i8)>;

pub(crate) struct Limits<'a> {
    pub max_len: usize,
    /// Cap on terms of the lowest degree, for two-degree windows.
    pub low_cap: Option<usize>,
    pub budget: u64,
    pub spent: &'a AtomicU64,
    pub stop: &'a AtomicBool,
    pub stop_at_first: bool,
    pub collect_all: bool,
}

#[derive(Debug, Default, Clone)]
pub(crate) struct RootRun {
    pub probes: u64,
    pub cycles_by_length: [u64; 9],
    pub nonzero: Vec<Multiset>,
    pub all: Vec<Multiset>,
    pub aborted: bool,
}

const FLUSH: u64 = 1 << 12;

pub(crate) struct Walker<'a> {
    space: &'a TermSpace,
    weights: &'a [u64],
    modulus: u64,
    root: u32,
    limits: &'a Limits<'a>,
    residual: Vec<i32>,
    nz: Vec<u32>,
    pos: Vec<u32>,
    l1: [i32; 3],
    count: Vec<i8>,
    forbid: Vec<u16>,
    chosen: Multiset,
    used_low: usize,
    pending: u64,
    pub run: RootRun,
}

type Cands = SmallVec<[(u32, i8); 24]>;

impl<'a> Walker<'a> {
    pub fn new(space: &'a TermSpace, weights: &'a [u64], modulus: u64, root: u32, limits: &'a Limits<'a>) -> Self {
        let faces = space.face_count();
        Walker {
            space,
            weights,
            modulus,
            root,
            limits,
            residual: vec![0; faces],
            nz: Vec::new(),
            pos: vec![u32::MAX; faces],
            l1: [0; 3],
            count: vec![0; space.len()],
            forbid: vec![0; space.len()],
            chosen: Vec::new(),
            used_low: 0,
            pending: 0,
            run: RootRun::default(),
        }
    }

    fn add(&mut self, t: u32, s: i8) {
        for &(f, e) in &self.space.faces[t as usize] {
            let fi = f as usize;
            let old = self.residual[fi];
            let new = old + (s * e) as i32;
            self.residual[fi] = new;
            self.l1[self.space.face_level[fi] as usize] += new.abs() - old.abs();
            if old == 0 {
                self.pos[fi] = self.nz.len() as u32;
                self.nz.push(f);
            } else if new == 0 {
                let p = self.pos[fi] as usize;
                let last = *self.nz.last().expect("nonempty");
                self.nz.swap_remove(p);
                if p < self.nz.len() {
                    self.pos[last as usize] = p as u32;
                }
                self.pos[fi] = u32::MAX;
            }
        }
        self.count[t as usize] += s;
        if self.space.level[t as usize] == 0 {
            self.used_low += 1;
        }
        self.chosen.push((t, s));
    }

    fn remove(&mut self, t: u32, s: i8) {
        self.chosen.pop();
        if self.space.level[t as usize] == 0 {
            self.used_low -= 1;
        }
        self.count[t as usize] -= s;
        for &(f, e) in &self.space.faces[t as usize] {
            let fi = f as usize;
            let old = self.residual[fi];
            let new = old - (s * e) as i32;
            self.residual[fi] = new;
            self.l1[self.space.face_level[fi] as usize] += new.abs() - old.abs();
            if old == 0 {
                self.pos[fi] = self.nz.len() as u32;
                self.nz.push(f);
            } else if new == 0 {
                let p = self.pos[fi] as usize;
                let last = *self.nz.last().expect("nonempty");
                self.nz.swap_remove(p);
                if p < self.nz.len() {
                    self.pos[last as usize] = p as u32;
                }
                self.pos[fi] = u32::MAX;
            }
        }
    }

    fn low_left(&self, remaining: usize) -> usize {
        match self.limits.low_cap {
            Some(cap) => remaining.min(cap.saturating_sub(self.used_low)),
            None => remaining,
        }
    }

    fn feasible(&self, remaining: usize) -> bool {
        let r = remaining as i32;
        let low = self.low_left(remaining) as i32;
        let two = self.space.levels == 2;
        let caps = if two { [3 * low, 3 * r, 3 * r] } else { [3 * r, 3 * r, 0] };
        self.l1.iter().zip(caps).all(|(&l, c)| l <= c) && self.l1.iter().sum::<i32>() <= 6 * r
    }

    /// Terms able to reduce the residual face with the fewest such terms.
    fn candidates(&self, remaining: usize) -> Option<Cands> {
        let mut best: Option<Cands> = None;
        let low_open = self.low_left(remaining) > 0;
        for &f in &self.nz {
            let want = -self.residual[f as usize].signum() as i8;
            let mut c: Cands = SmallVec::new();
            for &(t, e) in &self.space.cancellers[f as usize] {
                let s = want * e.signum();
                let ti = t as usize;
                if t < self.root || self.forbid[ti] != 0 || self.count[ti] * s < 0 {
                    continue;
                }
                if !low_open && self.space.level[ti] == 0 {
                    continue;
                }
                c.push((t, s));
                if best.as_ref().is_some_and(|b| c.len() >= b.len()) {
                    break;
                }
            }
            if best.as_ref().map_or(true, |b| c.len() < b.len()) {
                let empty = c.is_empty();
                best = Some(c);
                if empty {
                    return None;
                }
            }
        }
        best
    }

    fn tick(&mut self) -> bool {
        self.run.probes += 1;
        self.pending += 1;
        if self.pending >= FLUSH {
            let total = self.limits.spent.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            if total > self.limits.budget {
                self.run.aborted = true;
                self.limits.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.run.aborted && !self.limits.stop.load(Ordering::Relaxed)
    }

    pub fn finish(&mut self) {
        self.limits.spent.fetch_add(self.pending, Ordering::Relaxed);
        self.pending = 0;
    }

    fn record(&mut self) {
        let len = self.chosen.len();
        self.run.cycles_by_length[len.min(8)] += 1;
        let m = self.modulus as i64;
        let value = self
            .chosen
            .iter()
            .fold(0i64, |acc, &(t, s)| (acc + s as i64 * self.weights[t as usize] as i64).rem_euclid(m));
        if value != 0 {
            self.run.nonzero.push(self.chosen.clone());
            if self.limits.stop_at_first {
                self.limits.stop.store(true, Ordering::Relaxed);
            }
        }
        if self.limits.collect_all {
            self.run.all.push(self.chosen.clone());
        }
    }

    pub fn search(&mut self) {
        self.add(self.root, 1);
        self.descend(self.limits.max_len - 1);
        self.remove(self.root, 1);
        self.finish();
    }

    fn descend(&mut self, remaining: usize) {
        if !self.tick() {
            return;
        }
        if self.nz.is_empty() {
            self.record();
            return;
        }
        if remaining == 0 || !self.feasible(remaining) {
            return;
        }
        let Some(cands) = self.candidates(remaining) else { return };
        for &(t, s) in &cands {
            self.add(t, s);
            self.descend(remaining - 1);
            self.remove(t, s);
            self.forbid[t as usize] += 1;
        }
        for &(t, _) in &cands {
            self.forbid[t as usize] -= 1;
        }
    }

    /// One random root-to-leaf walk; returns the Knuth estimate of the tree size.
    pub fn sample(&mut self, rng: &mut impl Rng) -> f64 {
        let mut weight = 1.0f64;
        let mut total = 1.0f64;
        let mut path: Vec<(u32, i8)> = Vec::new();
        let mut marked: Vec<u32> = Vec::new();
        self.add(self.root, 1);
        let mut remaining = self.limits.max_len - 1;
        loop {
            if self.nz.is_empty() || remaining == 0 || !self.feasible(remaining) {
                break;
            }
            let Some(cands) = self.candidates(remaining) else { break };
            let pick = rng.gen_range(0..cands.len());
            for &(t, _) in &cands[..pick] {
                self.forbid[t as usize] += 1;
                marked.push(t);
            }
            weight *= cands.len() as f64;
            total += weight;
            let (t, s) = cands[pick];
            self.add(t, s);
            path.push((t, s));
            remaining -= 1;
        }
        while let Some((t, s)) = path.pop() {
            self.remove(t, s);
        }
        for t in marked {
            self.forbid[t as usize] -= 1;
        }
        self.remove(self.root, 1);
        total
    }
}
