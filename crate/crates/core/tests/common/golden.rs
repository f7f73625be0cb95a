//! The relation catalog, hand-transcribed: for every listed entry with at
//! most six points, the instantiated family at n = 2 must equal the printed
//! formula's expansion, term by term. The expected sides are written out
//! directly from the formulas — no delta machinery involved.

use num_complex::Complex64;
use partition_calculus::delta::tuples;
use partition_calculus::ops;
use partition_calculus::relations::{instantiate, GeneratorSymbol, Term, Word};
use partition_calculus::Partition;

const N: usize = 2;

fn parse(text: &str) -> Partition {
    Partition::parse(text).unwrap()
}

fn u(row: usize, col: usize) -> GeneratorSymbol {
    GeneratorSymbol { row, col, star: false }
}

fn us(row: usize, col: usize) -> GeneratorSymbol {
    GeneratorSymbol { row, col, star: true }
}

fn word(factors: Vec<GeneratorSymbol>) -> Term {
    (Complex64::new(1.0, 0.0), Word { factors, ..Word::default() })
}

fn side(words: Vec<Vec<GeneratorSymbol>>) -> Vec<Term> {
    words.into_iter().map(word).collect()
}

/// `delta * 1`: the unit term when the condition holds, nothing otherwise.
fn unit_if(condition: bool) -> Vec<Term> {
    if condition {
        vec![(Complex64::new(1.0, 0.0), Word::unit())]
    } else {
        Vec::new()
    }
}

/// Kronecker gate in front of a sum of words.
fn gate(condition: bool, side: Vec<Term>) -> Vec<Term> {
    if condition {
        side
    } else {
        Vec::new()
    }
}

fn sorted(mut side: Vec<Term>) -> Vec<Term> {
    side.sort_by(|a, b| a.1.cmp(&b.1));
    side
}

/// Compares the machine expansion with the hand expansion at every free
/// tuple.
fn check<F>(literal: &str, expected: F)
where
    F: Fn(&[usize], &[usize]) -> (Vec<Term>, Vec<Term>),
{
    let p = parse(literal);
    for alpha in tuples(p.upper_len(), N) {
        for beta in tuples(p.lower_len(), N) {
            let instance = instantiate(&p, N, &alpha, &beta).unwrap().normalized();
            let (lhs, rhs) = expected(&alpha, &beta);
            assert_eq!(instance.lhs, sorted(lhs), "lhs of {p} at {alpha:?} {beta:?}");
            assert_eq!(instance.rhs, sorted(rhs), "rhs of {p} at {alpha:?} {beta:?}");
        }
    }
}

const K: std::ops::RangeInclusive<usize> = 1..=N;

// --- identity partitions ---------------------------------------------------

pub fn identity_white_and_black() {
    // u_ij = u_ij
    check("[ao | ao]", |a, b| (side(vec![vec![u(b[0], a[0])]]), side(vec![vec![u(b[0], a[0])]])));
    check("[ax | ax]", |a, b| {
        (side(vec![vec![us(b[0], a[0])]]), side(vec![vec![us(b[0], a[0])]]))
    });
}

pub fn identity_mixed_colors() {
    // u_ij = u_ij^*
    check("[ao | ax]", |a, b| (side(vec![vec![u(b[0], a[0])]]), side(vec![vec![us(b[0], a[0])]])));
    check("[ax | ao]", |a, b| (side(vec![vec![us(b[0], a[0])]]), side(vec![vec![u(b[0], a[0])]])));
}

pub fn identity_tensor_mixed() {
    // u_ij^* u_kl = u_ij u_kl^*
    check("[ax bo | ao bx]", |a, b| {
        (
            side(vec![vec![us(b[0], a[0]), u(b[1], a[1])]]),
            side(vec![vec![u(b[0], a[0]), us(b[1], a[1])]]),
        )
    });
    check("[ao bx | ax bo]", |a, b| {
        (
            side(vec![vec![u(b[0], a[0]), us(b[1], a[1])]]),
            side(vec![vec![us(b[0], a[0]), u(b[1], a[1])]]),
        )
    });
}

pub fn identity_tensor_powers() {
    // u_{i1j1}...u_{iljl} = u_{i1j1}^*...u_{iljl}^*
    check("[ao bo | ax bx]", |a, b| {
        (
            side(vec![vec![u(b[0], a[0]), u(b[1], a[1])]]),
            side(vec![vec![us(b[0], a[0]), us(b[1], a[1])]]),
        )
    });
    check("[ao bo co | ax bx cx]", |a, b| {
        (
            side(vec![vec![u(b[0], a[0]), u(b[1], a[1]), u(b[2], a[2])]]),
            side(vec![vec![us(b[0], a[0]), us(b[1], a[1]), us(b[2], a[2])]]),
        )
    });
}

// --- pair partitions -------------------------------------------------------

pub fn pairs_one_colored() {
    // sum_k u_ik u_jk = delta_ij (u u^t = 1)
    check("[| a a]", |_, b| {
        (unit_if(b[0] == b[1]), side(K.map(|k| vec![u(b[0], k), u(b[1], k)]).collect()))
    });
    // sum_k u_ki u_kj = delta_ij (u^t u = 1)
    check("[a a |]", |a, _| {
        (side(K.map(|k| vec![u(k, a[0]), u(k, a[1])]).collect()), unit_if(a[0] == a[1]))
    });
}

pub fn pairs_two_colored() {
    // u u^* = 1
    check("[| ao ax]", |_, b| {
        (unit_if(b[0] == b[1]), side(K.map(|k| vec![u(b[0], k), us(b[1], k)]).collect()))
    });
    // u^* u = 1
    check("[ax ao |]", |a, _| {
        (side(K.map(|k| vec![us(k, a[0]), u(k, a[1])]).collect()), unit_if(a[0] == a[1]))
    });
    // bar u (bar u)^* = 1
    check("[| ax ao]", |_, b| {
        (unit_if(b[0] == b[1]), side(K.map(|k| vec![us(b[0], k), u(b[1], k)]).collect()))
    });
    // (bar u)^* bar u = 1
    check("[ao ax |]", |a, _| {
        (side(K.map(|k| vec![u(k, a[0]), us(k, a[1])]).collect()), unit_if(a[0] == a[1]))
    });
}

pub fn pair_over_pair() {
    // delta_{i'j'} sum_k u_ki u_kj = delta_ij sum_k u_{i'k} u_{j'k}
    check("[a a | b b]", |a, b| {
        (
            gate(b[0] == b[1], side(K.map(|k| vec![u(k, a[0]), u(k, a[1])]).collect())),
            gate(a[0] == a[1], side(K.map(|l| vec![u(b[0], l), u(b[1], l)]).collect())),
        )
    });
}

pub fn pair_tensor_pair_black() {
    // (sum_k u_ik u_jk)(sum_l u_{i'l}^* u_{j'l}^*) = delta_ij delta_{i'j'}
    check("[| ao ao bx bx]", |_, b| {
        let mut words = Vec::new();
        for k in K {
            for l in K {
                words.push(vec![u(b[0], k), u(b[1], k), us(b[2], l), us(b[3], l)]);
            }
        }
        (unit_if(b[0] == b[1] && b[2] == b[3]), side(words))
    });
}

// --- crossing partitions ---------------------------------------------------

pub fn crossings() {
    // u_ij u_kl = u_kl u_ij
    check("[a b | b a]", |a, b| {
        (
            side(vec![vec![u(b[1], a[0]), u(b[0], a[1])]]),
            side(vec![vec![u(b[0], a[1]), u(b[1], a[0])]]),
        )
    });
    check("[ax bx | bx ax]", |a, b| {
        (
            side(vec![vec![us(b[1], a[0]), us(b[0], a[1])]]),
            side(vec![vec![us(b[0], a[1]), us(b[1], a[0])]]),
        )
    });
    // u_ij u_kl^* = u_kl^* u_ij
    check("[ao bx | bx ao]", |a, b| {
        (
            side(vec![vec![u(b[1], a[0]), us(b[0], a[1])]]),
            side(vec![vec![us(b[0], a[1]), u(b[1], a[0])]]),
        )
    });
    check("[ax bo | bo ax]", |a, b| {
        (
            side(vec![vec![us(b[1], a[0]), u(b[0], a[1])]]),
            side(vec![vec![u(b[0], a[1]), us(b[1], a[0])]]),
        )
    });
}

// --- singleton partitions --------------------------------------------------

pub fn singletons() {
    // sum_l u_jl = 1
    check("[| a]", |_, b| {
        (unit_if(true), side(K.map(|l| vec![u(b[0], l)]).collect()))
    });
    // product of two sums = 1
    check("[| a b]", |_, b| {
        let mut words = Vec::new();
        for k in K {
            for l in K {
                words.push(vec![u(b[0], k), u(b[1], l)]);
            }
        }
        (unit_if(true), side(words))
    });
    // (sum u)(sum u^*) = 1
    check("[| ao bx]", |_, b| {
        let mut words = Vec::new();
        for k in K {
            for l in K {
                words.push(vec![u(b[0], k), us(b[1], l)]);
            }
        }
        (unit_if(true), side(words))
    });
}

pub fn singleton_pair() {
    // sum_k u_kj = sum_l u_il
    check("[a | b]", |a, b| {
        (
            side(K.map(|k| vec![u(k, a[0])]).collect()),
            side(K.map(|l| vec![u(b[0], l)]).collect()),
        )
    });
}

pub fn rotated_singletons() {
    // sum_k u_kj^* = (sum u)(sum u)
    let rotated = ops::rotate_lower_to_upper(&parse("[| a b c]"), 1).unwrap();
    assert_eq!(rotated, parse("[ax | b c]"));
    check("[ax | b c]", |a, b| {
        let mut words = Vec::new();
        for l1 in K {
            for l2 in K {
                words.push(vec![u(b[0], l1), u(b[1], l2)]);
            }
        }
        (side(K.map(|k| vec![us(k, a[0])]).collect()), side(words))
    });
}

// --- three blocks ----------------------------------------------------------

pub fn three_blocks() {
    // u_ki u_kj = delta_ij u_ki
    check("[a a | a]", |a, b| {
        (
            side(vec![vec![u(b[0], a[0]), u(b[0], a[1])]]),
            gate(a[0] == a[1], side(vec![vec![u(b[0], a[0])]])),
        )
    });
    // u_ik u_jk = delta_ij u_ik
    check("[a | a a]", |a, b| {
        (
            gate(b[0] == b[1], side(vec![vec![u(b[0], a[0])]])),
            side(vec![vec![u(b[0], a[0]), u(b[1], a[0])]]),
        )
    });
}

// --- single blocks b_k and their rotations ---------------------------------

pub fn single_blocks() {
    // sum_l u_{i1 l} ... u_{ik l} = delta chain
    for size in 3..=6 {
        let p = Partition::builtin("block_b", &[size as i64]).unwrap();
        check(&p.to_string(), |_, b| {
            let chain = (0..size - 1).all(|t| b[t] == b[t + 1]);
            (unit_if(chain), side(K.map(|l| (0..size).map(|t| u(b[t], l)).collect()).collect()))
        });
    }
}

pub fn rotated_single_blocks() {
    let b3 = Partition::builtin("block_b", &[3]).unwrap();
    assert_eq!(ops::rotate_lower_to_upper(&b3, 1).unwrap(), parse("[ax | a a]"));
    // delta_{i1 i2} u_{i1 j}^* = u_{i1 j} u_{i2 j}
    check("[ax | a a]", |a, b| {
        (
            gate(b[0] == b[1], side(vec![vec![us(b[0], a[0])]])),
            side(vec![vec![u(b[0], a[0]), u(b[1], a[0])]]),
        )
    });
    // t = 2, s = 2: delta_{j1 j2} u^* u^* = delta_{i1 i2} u u
    check("[ax ax | a a]", |a, b| {
        (
            gate(b[0] == b[1], side(vec![vec![us(b[0], a[0]), us(b[0], a[1])]])),
            gate(a[0] == a[1], side(vec![vec![u(b[0], a[0]), u(b[1], a[0])]])),
        )
    });
}

// --- four blocks -----------------------------------------------------------

pub fn four_blocks_lower() {
    // sum_k u u^* u u^* = delta chain
    check("[| ao ax ao ax]", |_, b| {
        let chain = b[0] == b[1] && b[1] == b[2] && b[2] == b[3];
        (
            unit_if(chain),
            side(K.map(|k| vec![u(b[0], k), us(b[1], k), u(b[2], k), us(b[3], k)]).collect()),
        )
    });
    check("[| ao ao ax ax]", |_, b| {
        let chain = b[0] == b[1] && b[1] == b[2] && b[2] == b[3];
        (
            unit_if(chain),
            side(K.map(|k| vec![u(b[0], k), u(b[1], k), us(b[2], k), us(b[3], k)]).collect()),
        )
    });
}

pub fn four_blocks_rotated() {
    // the one-colored rotated four block: delta u u = delta u u
    check("[a a | a a]", |a, b| {
        (
            gate(b[0] == b[1], side(vec![vec![u(b[0], a[0]), u(b[0], a[1])]])),
            gate(a[0] == a[1], side(vec![vec![u(b[0], a[0]), u(b[1], a[0])]])),
        )
    });
    // rot_2 of the alternating coloring
    assert_eq!(
        ops::rotate_lower_to_upper(&parse("[| ao ax ao ax]"), 2).unwrap(),
        parse("[ao ax | ao ax]")
    );
    check("[ao ax | ao ax]", |a, b| {
        (
            gate(b[0] == b[1], side(vec![vec![u(b[0], a[0]), us(b[0], a[1])]])),
            gate(a[0] == a[1], side(vec![vec![u(b[0], a[0]), us(b[1], a[0])]])),
        )
    });
    // one corner move on the one-colored four block
    check("[a | a a a]", |a, b| {
        (
            gate(b[0] == b[1] && b[1] == b[2], side(vec![vec![u(b[0], a[0])]])),
            side(vec![vec![u(b[0], a[0]), u(b[1], a[0]), u(b[2], a[0])]]),
        )
    });
}

pub fn rotated_block_tensor() {
    // rot_2(b_2 tensor b_2): delta_{j1 j2} sum_k u^* u^* = delta_{i1 i2} sum_l u u
    assert_eq!(
        ops::rotate_lower_to_upper(&parse("[| a a b b]"), 2).unwrap(),
        parse("[ax ax | b b]")
    );
    check("[ax ax | b b]", |a, b| {
        (
            gate(b[0] == b[1], side(K.map(|k| vec![us(k, a[0]), us(k, a[1])]).collect())),
            gate(a[0] == a[1], side(K.map(|l| vec![u(b[0], l), u(b[1], l)]).collect())),
        )
    });
}

// --- further relations -----------------------------------------------------

pub fn half_liberation() {
    // u_ij u_kl u_st = u_st u_kl u_ij
    check("[a b c | c b a]", |a, b| {
        (
            side(vec![vec![u(b[2], a[0]), u(b[1], a[1]), u(b[0], a[2])]]),
            side(vec![vec![u(b[0], a[2]), u(b[1], a[1]), u(b[2], a[0])]]),
        )
    });
}

pub fn rotated_h_partitions() {
    let h2 = Partition::builtin("h", &[2]).unwrap();
    assert_eq!(ops::rotate_lower_to_upper(&h2, 2).unwrap(), parse("[ax bx | b a]"));
    check("[ax bx | b a]", |a, b| {
        (
            side(vec![vec![us(b[1], a[0]), us(b[0], a[1])]]),
            side(vec![vec![u(b[0], a[1]), u(b[1], a[0])]]),
        )
    });
    let h3 = Partition::builtin("h", &[3]).unwrap();
    assert_eq!(
        ops::rotate_lower_to_upper(&h3, 3).unwrap(),
        parse("[ax bx ax | b a b]")
    );
    check("[ax bx ax | b a b]", |a, b| {
        (
            gate(
                b[0] == b[2],
                side(vec![vec![us(b[1], a[0]), us(b[0], a[1]), us(b[1], a[2])]]),
            ),
            gate(
                a[0] == a[2],
                side(vec![vec![u(b[0], a[1]), u(b[1], a[0]), u(b[2], a[1])]]),
            ),
        )
    });
}

pub fn pair_positioner() {
    // delta_{kk'} u_ki u_ki' u_st = delta_{ii'} u_st u_ki u_k'i
    check("[a a b | b a a]", |a, b| {
        (
            gate(
                b[1] == b[2],
                side(vec![vec![u(b[1], a[0]), u(b[1], a[1]), u(b[0], a[2])]]),
            ),
            gate(
                a[0] == a[1],
                side(vec![vec![u(b[0], a[2]), u(b[1], a[0]), u(b[2], a[0])]]),
            ),
        )
    });
}

pub fn positioners() {
    // u_ij (sum_k u_{k j1}) = (sum_l u_{i1 l}) u_ij
    check("[a b | c a]", |a, b| {
        (
            side(K.map(|k| vec![u(b[1], a[0]), u(k, a[1])]).collect()),
            side(K.map(|l| vec![u(b[0], l), u(b[1], a[0])]).collect()),
        )
    });
    // u_ij (sum_k u_{k j1}^*) = (sum_l u_{i1 l}) u_ij^*
    check("[ao bx | c ax]", |a, b| {
        (
            side(K.map(|k| vec![u(b[1], a[0]), us(k, a[1])]).collect()),
            side(K.map(|l| vec![u(b[0], l), us(b[1], a[0])]).collect()),
        )
    });
}

/// Runs the whole catalog in one call.
pub fn verify_all() {
    identity_white_and_black();
    identity_mixed_colors();
    identity_tensor_mixed();
    identity_tensor_powers();
    pairs_one_colored();
    pairs_two_colored();
    pair_over_pair();
    pair_tensor_pair_black();
    crossings();
    singletons();
    singleton_pair();
    rotated_singletons();
    three_blocks();
    single_blocks();
    rotated_single_blocks();
    four_blocks_lower();
    four_blocks_rotated();
    rotated_block_tensor();
    half_liberation();
    rotated_h_partitions();
    pair_positioner();
    positioners();
}
