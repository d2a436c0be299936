//! The Avella-Alaminos–Geiß derived invariant of a gentle algebra.
//!
//! Computed on the blossoming quiver: every vertex gets two incoming and two
//! outgoing slots, with in-slot `k` continuing permittedly through out-slot
//! `k` and forbiddenly through the other one. Real arrows are placed so that
//! zero relations sit on forbidden pairs; vacant slots are filled by blossom
//! arrows to or from fresh leaves. Threads then become the maximal walks
//! following only permitted (resp. forbidden) continuations.

use serde::Serialize;

use super::gentle::is_gentle;
use super::ClassifyError;
use crate::quiver::BoundQuiverPresentation;

/// Sorted multiset of pairs `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AGInvariant(pub Vec<(usize, usize)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Real(usize),
    Blossom(usize),
}

struct Blossomed {
    /// `next[a][k]`: what continues arrow `a` at its target through out-slot
    /// `k`; permitted when `k` is `a`'s in-slot.
    next: Vec<[Slot; 2]>,
    in_slot: Vec<usize>,
    /// Blossom in-arrow `b`: its vertex and in-slot.
    blossom_in: Vec<(usize, usize)>,
    /// For each vertex, what sits in each out-slot.
    out_slots: Vec<[Slot; 2]>,
}

fn place(p: &BoundQuiverPresentation) -> Blossomed {
    let q = p.quiver();
    let n = q.vertex_count();
    let mut in_slot = vec![0; q.arrow_count()];
    let mut out_slot = vec![0; q.arrow_count()];
    for v in 0..n {
        let ins: Vec<usize> = q.arrows_into(v).collect();
        let outs: Vec<usize> = q.arrows_from(v).collect();
        let found = (0..4).find(|&mask| {
            let slot_in = |i: usize| if ins.len() == 2 { (i + (mask & 1)) % 2 } else { mask & 1 };
            let slot_out = |j: usize| if outs.len() == 2 { (j + (mask >> 1)) % 2 } else { mask >> 1 };
            ins.iter().enumerate().all(|(i, &a)| {
                outs.iter()
                    .enumerate()
                    .all(|(j, &b)| p.is_relation(&[a, b]) == (slot_in(i) != slot_out(j)))
            })
        });
        let mask = found.expect("gentle vertices admit a slot placement");
        for (i, &a) in ins.iter().enumerate() {
            in_slot[a] = if ins.len() == 2 { (i + (mask & 1)) % 2 } else { mask & 1 };
        }
        for (j, &b) in outs.iter().enumerate() {
            out_slot[b] = if outs.len() == 2 { (j + (mask >> 1)) % 2 } else { mask >> 1 };
        }
    }
    let mut blossom_in = Vec::new();
    let mut blossom_out = 0;
    let mut out_slots = Vec::with_capacity(n);
    for v in 0..n {
        let mut ins = [None; 2];
        for a in q.arrows_into(v) {
            ins[in_slot[a]] = Some(a);
        }
        for (k, slot) in ins.iter().enumerate() {
            if slot.is_none() {
                blossom_in.push((v, k));
            }
        }
        let mut outs = [Slot::Blossom(usize::MAX); 2];
        for b in q.arrows_from(v) {
            outs[out_slot[b]] = Slot::Real(b);
        }
        for slot in outs.iter_mut() {
            if *slot == Slot::Blossom(usize::MAX) {
                *slot = Slot::Blossom(blossom_out);
                blossom_out += 1;
            }
        }
        out_slots.push(outs);
    }
    let next = (0..q.arrow_count())
        .map(|a| out_slots[q.arrow(a).target])
        .collect();
    Blossomed {
        next,
        in_slot,
        blossom_in,
        out_slots,
    }
}

impl Blossomed {
    /// Follows a thread entering `vertex` through in-slot `k`; returns the
    /// sink blossom reached and the number of real arrows passed.
    fn thread(&self, mut vertex_slots: [Slot; 2], mut k: usize, permitted: bool) -> (usize, usize) {
        let mut real = 0;
        loop {
            let choice = if permitted { k } else { 1 - k };
            match vertex_slots[choice] {
                Slot::Blossom(b) => return (b, real),
                Slot::Real(a) => {
                    real += 1;
                    vertex_slots = self.next[a];
                    k = self.in_slot[a];
                }
            }
        }
    }
}

pub fn ag_invariant(p: &BoundQuiverPresentation) -> Result<AGInvariant, ClassifyError> {
    if !is_gentle(p).is_gentle() {
        return Err(ClassifyError::NotGentle);
    }
    let q = p.quiver();
    let b = place(p);
    let count = b.blossom_in.len();

    // permitted thread from blossom-in i ends at sink `perm_end[i]`; the
    // forbidden thread ending at sink j starts at blossom-in `forb_start[j]`
    let mut perm_end = vec![0; count];
    let mut forb_start = vec![usize::MAX; count];
    let mut forb_len = vec![0; count];
    for (i, &(v, k)) in b.blossom_in.iter().enumerate() {
        perm_end[i] = b.thread(b.out_slots[v], k, true).0;
        let (sink, len) = b.thread(b.out_slots[v], k, false);
        forb_start[sink] = i;
        forb_len[sink] = len;
    }

    let mut pairs = Vec::new();
    let mut seen = vec![false; count];
    for start in 0..count {
        if seen[start] {
            continue;
        }
        let (mut n, mut m, mut i) = (0, 0, start);
        while !seen[i] {
            seen[i] = true;
            n += 1;
            let sink = perm_end[i];
            m += forb_len[sink];
            i = forb_start[sink];
        }
        pairs.push((n, m));
    }

    // forbidden cycles: arrows never reached by a forbidden thread from a blossom
    let mut on_thread = vec![false; q.arrow_count()];
    for &(v, k) in &b.blossom_in {
        let (mut slots, mut k) = (b.out_slots[v], k);
        while let Slot::Real(a) = slots[1 - k] {
            on_thread[a] = true;
            slots = b.next[a];
            k = b.in_slot[a];
        }
    }
    for a0 in 0..q.arrow_count() {
        if on_thread[a0] {
            continue;
        }
        let mut len = 0;
        let mut a = a0;
        loop {
            on_thread[a] = true;
            len += 1;
            match b.next[a][1 - b.in_slot[a]] {
                Slot::Real(c) if c != a0 => a = c,
                Slot::Real(_) => break,
                Slot::Blossom(_) => unreachable!("arrow on a forbidden thread"),
            }
        }
        pairs.push((0, len));
    }
    pairs.sort();
    Ok(AGInvariant(pairs))
}
