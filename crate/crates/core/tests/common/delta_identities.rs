//! Exhaustive delta-identity suite over all one-colored partitions with at
//! most 3 upper and 3 lower points, n in {2, 3}, in exact integer
//! arithmetic. Values are tabulated per partition once, so the quadratic
//! pair loops reduce to table lookups.

use std::collections::HashMap;

use partition_calculus::delta::{delta, tuples};
use partition_calculus::enumerate::all_partitions;
use partition_calculus::ops;
use partition_calculus::Partition;
use rayon::prelude::*;

fn family() -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=3 {
        for l in 0..=3 {
            out.extend(all_partitions(k, l));
        }
    }
    out
}

/// delta_p over all index tuples, flattened: index = mixed-radix (i, j).
fn table(p: &Partition, n: usize) -> Vec<u8> {
    let (k, l) = (p.upper_len(), p.lower_len());
    let mut out = Vec::with_capacity(n.pow((k + l) as u32));
    for i in tuples(k, n) {
        for j in tuples(l, n) {
            out.push(delta(p, &i, &j).unwrap());
        }
    }
    out
}

fn tables(n: usize) -> HashMap<Partition, Vec<u8>> {
    family().into_iter().map(|p| {
        let t = table(&p, n);
        (p, t)
    }).collect()
}

pub fn involution_identity() {
    // delta_{p*}(i, j) = delta_p(j, i)
    for n in [2usize, 3] {
        for p in family() {
            let star = ops::involution(&p);
            for i in tuples(p.upper_len(), n) {
                for j in tuples(p.lower_len(), n) {
                    assert_eq!(
                        delta(&star, &j, &i).unwrap(),
                        delta(&p, &i, &j).unwrap(),
                        "{p} at {i:?} {j:?} n={n}"
                    );
                }
            }
        }
    }
}

pub fn reflection_identity() {
    // delta_{p~}(i, j) = delta_p(rev i, rev j)
    for n in [2usize, 3] {
        for p in family() {
            let reflected = ops::vreflect(&p);
            for i in tuples(p.upper_len(), n) {
                for j in tuples(p.lower_len(), n) {
                    let ri: Vec<usize> = i.iter().rev().copied().collect();
                    let rj: Vec<usize> = j.iter().rev().copied().collect();
                    assert_eq!(
                        delta(&reflected, &ri, &rj).unwrap(),
                        delta(&p, &i, &j).unwrap(),
                        "{p} at {i:?} {j:?} n={n}"
                    );
                }
            }
        }
    }
}

pub fn tensor_identity() {
    // delta_{p (x) q}(i i', j j') = delta_p(i, j) delta_q(i', j'),
    // over all pairs whose tensor stays within the 3+3 family
    for n in [2usize, 3] {
        let tab = tables(n);
        let members = family();
        members.par_iter().for_each(|p| {
            for q in &members {
                if p.upper_len() + q.upper_len() > 3 || p.lower_len() + q.lower_len() > 3 {
                    continue;
                }
                let t = ops::tensor(p, q);
                let tt = table(&t, n);
                let (kp, lp) = (p.upper_len(), p.lower_len());
                let (kq, lq) = (q.upper_len(), q.lower_len());
                let tp = &tab[p];
                let tq = &tab[q];
                let mut idx = 0;
                for (pi, i1) in tuples(kp, n).enumerate() {
                    for (qi, _i2) in tuples(kq, n).enumerate() {
                        for (pj, j1) in tuples(lp, n).enumerate() {
                            for (qj, _j2) in tuples(lq, n).enumerate() {
                                let expected = tp[pi * n.pow(lp as u32) + pj]
                                    * tq[qi * n.pow(lq as u32) + qj];
                                assert_eq!(
                                    tt[idx], expected,
                                    "tensor {p} (x) {q} at {i1:?}.. {j1:?}.. n={n}"
                                );
                                idx += 1;
                            }
                        }
                    }
                }
            }
        });
    }
}

pub fn composition_identity() {
    // n^{rl(q, p)} delta_{qp}(i, j) = sum_zeta delta_p(i, zeta) delta_q(zeta, j)
    for n in [2usize, 3] {
        let tab = tables(n);
        let members = family();
        members.par_iter().for_each(|p| {
            let (k, l) = (p.upper_len(), p.lower_len());
            let tp = &tab[p];
            for q in &members {
                if q.upper_len() != l {
                    continue;
                }
                let m = q.lower_len();
                let out = ops::compose(q, p).unwrap();
                let tq = &tab[q];
                let tqp = &tab[&out.result];
                let factor = (n as u64).pow(out.removed_loops as u32);
                let (zn, mn) = (n.pow(l as u32), n.pow(m as u32));
                for i_idx in 0..n.pow(k as u32) {
                    for j_idx in 0..mn {
                        let mut sum = 0u64;
                        for z_idx in 0..zn {
                            sum += (tp[i_idx * zn + z_idx] * tq[z_idx * mn + j_idx]) as u64;
                        }
                        assert_eq!(
                            factor * tqp[i_idx * mn + j_idx] as u64,
                            sum,
                            "compose {q} . {p} n={n} i={i_idx} j={j_idx}"
                        );
                    }
                }
            }
        });
    }
}

/// Runs all four identity checks in one call.
pub fn verify_all() {
    involution_identity();
    reflection_identity();
    tensor_identity();
    composition_identity();
}
