//! Bounded closure of a generator set under the category operations:
//! breadth-first fixed point with canonical-form deduplication, replayable
//! derivation witnesses, early-exit membership search and closure
//! comparison. Everything here is an under-approximation of the true
//! (unbounded) category: absence from the result only means "not derivable
//! within the configured point budget".

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::rc::Rc;

use crate::ops::{self, OpsError, RotationCorner};
use crate::partition::{Partition, Row};

/// Three-state switch for operations whose enablement depends on the seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toggle {
    Auto,
    On,
    Off,
}

/// Which operations the closure applies. The default is the category set
/// (tensor, composition, reflection) with involution in `Auto` mode:
/// enabled only when both pair orientations are among the seeds. Rotation
/// and erasing are opt-in shortcuts; they are sound whenever the base pairs
/// are present.
#[derive(Clone, Debug)]
pub struct EnabledOps {
    pub tensor: bool,
    pub compose: bool,
    pub involution: Toggle,
    pub reflect: bool,
    pub rotate: bool,
    pub erase: bool,
}

impl Default for EnabledOps {
    fn default() -> Self {
        EnabledOps {
            tensor: true,
            compose: true,
            involution: Toggle::Auto,
            reflect: true,
            rotate: false,
            erase: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosureOptions {
    /// Partitions with more points than this are not reported.
    pub max_points: usize,
    /// Intermediate results may exceed `max_points` by this much.
    pub work_margin: usize,
    pub two_colored: bool,
    /// Seed the base partitions (pairs and identities) alongside the
    /// generators.
    pub seed_base: bool,
    pub ops: EnabledOps,
    /// Hard cap on the number of stored partitions; exceeding it aborts the
    /// search with `incomplete = true`.
    pub node_budget: usize,
}

impl ClosureOptions {
    pub fn new(max_points: usize) -> Self {
        ClosureOptions {
            max_points,
            work_margin: 4,
            two_colored: false,
            seed_base: true,
            ops: EnabledOps::default(),
            node_budget: 2_000_000,
        }
    }

    pub fn with_margin(mut self, work_margin: usize) -> Self {
        self.work_margin = work_margin;
        self
    }

    pub fn with_rotate(mut self, rotate: bool) -> Self {
        self.ops.rotate = rotate;
        self
    }

    pub fn two_colored(mut self) -> Self {
        self.two_colored = true;
        self
    }
}

/// The base seeded in every closure run: pair partitions and identities,
/// in the colorings of the respective setting.
pub fn base_partitions(two_colored: bool) -> Vec<Partition> {
    let parse = |s: &str| Partition::parse(s).unwrap();
    if two_colored {
        vec![
            parse("[| ao ax]"),
            parse("[| ax ao]"),
            parse("[ao ax |]"),
            parse("[ax ao |]"),
            parse("[ao | ao]"),
            parse("[ax | ax]"),
        ]
    } else {
        vec![parse("[| a a]"), parse("[a a |]"), parse("[a | a]")]
    }
}

/// A replayable construction of a partition from seeds. Leaves carry their
/// partition so replay needs no external context. Children are shared
/// (`Rc`) because closure members reuse each other's derivations heavily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Generator(Partition),
    Base(Partition),
    Tensor(Rc<Derivation>, Rc<Derivation>),
    /// `Compose(q, p)` is the composition `qp` (q below p).
    Compose(Rc<Derivation>, Rc<Derivation>),
    Involution(Rc<Derivation>),
    /// Two-colored reflection: colors are inverted.
    Reflect(Rc<Derivation>),
    /// One-colored reflection: plain mirror image, colors untouched.
    ReflectPlain(Rc<Derivation>),
    /// Two-colored rotation: the moved point's color is inverted.
    Rotate(RotationCorner, Rc<Derivation>),
    /// One-colored rotation: same corner move, colors untouched.
    RotatePlain(RotationCorner, Rc<Derivation>),
    Erase(Row, usize, Rc<Derivation>),
}

impl Derivation {
    /// Re-executes the tree through the ops module.
    pub fn replay(&self) -> Result<Partition, OpsError> {
        match self {
            Derivation::Generator(p) | Derivation::Base(p) => Ok(p.clone()),
            Derivation::Tensor(a, b) => Ok(ops::tensor(&a.replay()?, &b.replay()?)),
            Derivation::Compose(q, p) => Ok(ops::compose(&q.replay()?, &p.replay()?)?.result),
            Derivation::Involution(c) => Ok(ops::involution(&c.replay()?)),
            Derivation::Reflect(c) => Ok(ops::verticolor_reflect(&c.replay()?)),
            Derivation::ReflectPlain(c) => Ok(ops::vreflect(&c.replay()?)),
            Derivation::Rotate(corner, c) => ops::rotate(&c.replay()?, *corner),
            Derivation::RotatePlain(corner, c) => ops::rotate_keep_colors(&c.replay()?, *corner),
            Derivation::Erase(row, j, c) => ops::erase_pair(&c.replay()?, *row, *j),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Derivation::Generator(_) | Derivation::Base(_) => 0,
            Derivation::Tensor(a, b) | Derivation::Compose(a, b) => 1 + a.depth().max(b.depth()),
            Derivation::Involution(c)
            | Derivation::Reflect(c)
            | Derivation::ReflectPlain(c)
            | Derivation::Rotate(_, c)
            | Derivation::RotatePlain(_, c)
            | Derivation::Erase(_, _, c) => 1 + c.depth(),
        }
    }

    /// Nested s-expression text, e.g.
    /// `(compose (generator [a a |]) (base [| a a]))`.
    pub fn sexp(&self) -> String {
        match self {
            Derivation::Generator(p) => format!("(generator {p})"),
            Derivation::Base(p) => format!("(base {p})"),
            Derivation::Tensor(a, b) => format!("(tensor {} {})", a.sexp(), b.sexp()),
            Derivation::Compose(q, p) => format!("(compose {} {})", q.sexp(), p.sexp()),
            Derivation::Involution(c) => format!("(involution {})", c.sexp()),
            Derivation::Reflect(c) => format!("(reflect {})", c.sexp()),
            Derivation::ReflectPlain(c) => format!("(reflect-plain {})", c.sexp()),
            Derivation::Rotate(corner, c) => {
                format!("(rotate {} {})", corner_name(*corner), c.sexp())
            }
            Derivation::RotatePlain(corner, c) => {
                format!("(rotate-plain {} {})", corner_name(*corner), c.sexp())
            }
            Derivation::Erase(row, j, c) => {
                let row = if *row == Row::Upper { "upper" } else { "lower" };
                format!("(erase {row} {j} {})", c.sexp())
            }
        }
    }
}

fn corner_name(corner: RotationCorner) -> &'static str {
    match corner {
        RotationCorner::UpperLeftDown => "upper-left-down",
        RotationCorner::UpperRightDown => "upper-right-down",
        RotationCorner::LowerLeftUp => "lower-left-up",
        RotationCorner::LowerRightUp => "lower-right-up",
    }
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    /// Canonically sorted members with at most `max_points` points.
    pub members: Vec<Partition>,
    /// Derivation witness for every partition encountered (including ones
    /// above `max_points` but within the work margin).
    pub derivations: BTreeMap<Partition, Derivation>,
    /// Frontier size per breadth-first round.
    pub rounds: Vec<usize>,
    pub op_applications: u64,
    pub incomplete: bool,
}

impl ClosureResult {
    pub fn contains(&self, p: &Partition) -> bool {
        self.members.binary_search(p).is_ok()
    }

    /// Members of shape `(k, l)`.
    pub fn layer(&self, k: usize, l: usize) -> Vec<&Partition> {
        self.members
            .iter()
            .filter(|p| p.upper_len() == k && p.lower_len() == l)
            .collect()
    }

    /// Header plus one line per member: `(k,l) <literal> <depth>`.
    pub fn dump(&self, options: &ClosureOptions) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "closure max_points={} work_margin={} two_colored={} members={} incomplete={}",
            options.max_points,
            options.work_margin,
            options.two_colored,
            self.members.len(),
            self.incomplete
        );
        for p in &self.members {
            let depth = self.derivations.get(p).map(|d| d.depth()).unwrap_or(0);
            let _ = writeln!(out, "({},{}) {} {}", p.upper_len(), p.lower_len(), p, depth);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    EqualAtBound,
    XinY,
    YinX,
    Incomparable,
}

struct Engine {
    bound: usize,
    ops: EnabledOps,
    involution_on: bool,
    two_colored: bool,
    node_budget: usize,
    /// Committed partitions with their derivations, in discovery order.
    known: Vec<(Partition, Rc<Derivation>)>,
    seen: HashMap<Partition, ()>,
    pending: Vec<(Partition, Rc<Derivation>)>,
    rounds: Vec<usize>,
    op_applications: u64,
    incomplete: bool,
}

/// Queues a freshly produced partition unless it is too large or already
/// known. Free function over split fields so callers can keep `known`
/// borrowed.
fn offer(
    seen: &mut HashMap<Partition, ()>,
    pending: &mut Vec<(Partition, Rc<Derivation>)>,
    bound: usize,
    p: Partition,
    d: Rc<Derivation>,
) {
    if p.points() > bound || seen.contains_key(&p) {
        return;
    }
    seen.insert(p.clone(), ());
    pending.push((p, d));
}

impl Engine {
    fn seeds_have_pairs(seeds: &[Partition]) -> bool {
        let single_pair = |p: &Partition, upper: bool| {
            p.points() == 2
                && p.block_count() == 1
                && (if upper { p.lower_len() == 0 } else { p.upper_len() == 0 })
        };
        seeds.iter().any(|p| single_pair(p, false)) && seeds.iter().any(|p| single_pair(p, true))
    }

    fn expand(&mut self, target: Option<&Partition>) -> Option<Rc<Derivation>> {
        while !self.pending.is_empty() {
            let mut frontier = std::mem::take(&mut self.pending);
            frontier.sort_by(|a, b| a.0.cmp(&b.0));
            self.rounds.push(frontier.len());
            // commit the frontier so binary ops can pair frontier items
            // with each other and with everything older
            let start = self.known.len();
            self.known.extend(frontier);
            if let Some(t) = target {
                if let Some((_, d)) = self.known[start..].iter().find(|(p, _)| p == t) {
                    return Some(d.clone());
                }
            }
            if self.known.len() > self.node_budget {
                self.incomplete = true;
                return None;
            }
            for f_idx in start..self.known.len() {
                self.expand_one(f_idx);
                if self.known.len() + self.pending.len() > self.node_budget {
                    self.incomplete = true;
                    return None;
                }
            }
        }
        None
    }

    fn expand_one(&mut self, f_idx: usize) {
        let known = std::mem::take(&mut self.known);
        let (f, fd) = (&known[f_idx].0, &known[f_idx].1);
        if self.involution_on {
            self.op_applications += 1;
            offer(
                &mut self.seen,
                &mut self.pending,
                self.bound,
                ops::involution(f),
                Rc::new(Derivation::Involution(fd.clone())),
            );
        }
        if self.ops.reflect {
            self.op_applications += 1;
            // as with rotation, the one-colored calculus mirrors without
            // the color flip, and the derivation must record which variant
            // produced the member so replay is exact
            let (reflected, derivation) = if self.two_colored {
                (
                    ops::verticolor_reflect(f),
                    Derivation::Reflect(fd.clone()),
                )
            } else {
                (ops::vreflect(f), Derivation::ReflectPlain(fd.clone()))
            };
            offer(
                &mut self.seen,
                &mut self.pending,
                self.bound,
                reflected,
                Rc::new(derivation),
            );
        }
        if self.ops.rotate {
            for corner in [
                RotationCorner::UpperLeftDown,
                RotationCorner::UpperRightDown,
                RotationCorner::LowerLeftUp,
                RotationCorner::LowerRightUp,
            ] {
                // the one-colored calculus rotates without the color flip;
                // using the two-colored rotation there would leak black
                // points into an all-white closure
                let (rotated, derivation) = if self.two_colored {
                    (
                        ops::rotate(f, corner),
                        Derivation::Rotate(corner, fd.clone()),
                    )
                } else {
                    (
                        ops::rotate_keep_colors(f, corner),
                        Derivation::RotatePlain(corner, fd.clone()),
                    )
                };
                if let Ok(rotated) = rotated {
                    self.op_applications += 1;
                    offer(
                        &mut self.seen,
                        &mut self.pending,
                        self.bound,
                        rotated,
                        Rc::new(derivation),
                    );
                }
            }
        }
        if self.ops.erase {
            for (row, len) in [(Row::Upper, f.upper_len()), (Row::Lower, f.lower_len())] {
                for j in 1..len {
                    if let Ok(erased) = ops::erase_pair(f, row, j) {
                        self.op_applications += 1;
                        offer(
                            &mut self.seen,
                            &mut self.pending,
                            self.bound,
                            erased,
                            Rc::new(Derivation::Erase(row, j, fd.clone())),
                        );
                    }
                }
            }
        }
        for (g, gd) in &known {
            if self.ops.tensor && f.points() + g.points() <= self.bound {
                self.op_applications += 2;
                offer(
                    &mut self.seen,
                    &mut self.pending,
                    self.bound,
                    ops::tensor(f, g),
                    Rc::new(Derivation::Tensor(fd.clone(), gd.clone())),
                );
                offer(
                    &mut self.seen,
                    &mut self.pending,
                    self.bound,
                    ops::tensor(g, f),
                    Rc::new(Derivation::Tensor(gd.clone(), fd.clone())),
                );
            }
            if self.ops.compose {
                // f below g
                if f.upper_len() == g.lower_len() && g.upper_len() + f.lower_len() <= self.bound {
                    if let Ok(out) = ops::compose(f, g) {
                        self.op_applications += 1;
                        offer(
                            &mut self.seen,
                            &mut self.pending,
                            self.bound,
                            out.result,
                            Rc::new(Derivation::Compose(fd.clone(), gd.clone())),
                        );
                    }
                }
                // g below f
                if g.upper_len() == f.lower_len() && f.upper_len() + g.lower_len() <= self.bound {
                    if let Ok(out) = ops::compose(g, f) {
                        self.op_applications += 1;
                        offer(
                            &mut self.seen,
                            &mut self.pending,
                            self.bound,
                            out.result,
                            Rc::new(Derivation::Compose(gd.clone(), fd.clone())),
                        );
                    }
                }
            }
        }
        self.known = known;
    }

    fn into_result(self, max_points: usize) -> ClosureResult {
        let mut members: Vec<Partition> = self
            .known
            .iter()
            .filter(|(p, _)| p.points() <= max_points)
            .map(|(p, _)| p.clone())
            .collect();
        members.sort();
        let derivations: BTreeMap<Partition, Derivation> = self
            .known
            .into_iter()
            .map(|(p, d)| (p, (*d).clone()))
            .collect();
        ClosureResult {
            members,
            derivations,
            rounds: self.rounds,
            op_applications: self.op_applications,
            incomplete: self.incomplete,
        }
    }
}

fn build_engine(generators: &[Partition], options: &ClosureOptions) -> Engine {
    let base = if options.seed_base {
        base_partitions(options.two_colored)
    } else {
        Vec::new()
    };
    let mut seeds: Vec<(Partition, Derivation)> = Vec::new();
    for b in &base {
        seeds.push((b.clone(), Derivation::Base(b.clone())));
    }
    for g in generators {
        if !seeds.iter().any(|(p, _)| p == g) {
            seeds.push((g.clone(), Derivation::Generator(g.clone())));
        }
    }
    let seed_partitions: Vec<Partition> = seeds.iter().map(|(p, _)| p.clone()).collect();
    let involution_on = match options.ops.involution {
        Toggle::On => true,
        Toggle::Off => false,
        Toggle::Auto => Engine::seeds_have_pairs(&seed_partitions),
    };
    let mut engine = Engine {
        bound: options.max_points + options.work_margin,
        ops: options.ops.clone(),
        involution_on,
        two_colored: options.two_colored,
        node_budget: options.node_budget,
        known: Vec::new(),
        seen: HashMap::new(),
        pending: Vec::new(),
        rounds: Vec::new(),
        op_applications: 0,
        incomplete: false,
    };
    for (p, d) in seeds {
        offer(&mut engine.seen, &mut engine.pending, engine.bound, p, Rc::new(d));
    }
    engine
}

/// Breadth-first fixed point of the enabled operations over the generators
/// plus base, retaining everything within `max_points + work_margin` during
/// the search and reporting the members within `max_points`.
pub fn close(generators: &[Partition], options: &ClosureOptions) -> ClosureResult {
    let mut engine = build_engine(generators, options);
    engine.expand(None);
    engine.into_result(options.max_points)
}

/// Searches for a derivation of `target`, stopping as soon as one exists.
/// `None` means "not derivable within the budget", never "not in the
/// category".
pub fn member(
    generators: &[Partition],
    options: &ClosureOptions,
    target: &Partition,
) -> Option<Derivation> {
    let mut engine = build_engine(generators, options);
    engine.expand(Some(target)).map(|d| (*d).clone())
}

/// Inclusion relation of the two bounded closures.
pub fn compare(x: &[Partition], y: &[Partition], options: &ClosureOptions) -> Comparison {
    let cx = close(x, options);
    let cy = close(y, options);
    let x_in_y = cx.members.iter().all(|p| cy.contains(p));
    let y_in_x = cy.members.iter().all(|p| cx.contains(p));
    match (x_in_y, y_in_x) {
        (true, true) => Comparison::EqualAtBound,
        (true, false) => Comparison::XinY,
        (false, true) => Comparison::YinX,
        (false, false) => Comparison::Incomparable,
    }
}

/// True iff `S` contains the base and is closed under every enabled
/// operation whose result stays within `max_points`.
pub fn is_category_at_bound(s: &[Partition], options: &ClosureOptions) -> bool {
    let set: std::collections::BTreeSet<&Partition> = s.iter().collect();
    for b in base_partitions(options.two_colored) {
        if b.points() <= options.max_points && !set.contains(&b) {
            return false;
        }
    }
    let bound = options.max_points;
    let contains = |p: &Partition| set.contains(p);
    for p in s {
        if options.ops.involution != Toggle::Off && !contains(&ops::involution(p)) {
            return false;
        }
        if options.ops.reflect {
            let reflected = if options.two_colored {
                ops::verticolor_reflect(p)
            } else {
                ops::vreflect(p)
            };
            if !contains(&reflected) {
                return false;
            }
        }
        for q in s {
            if options.ops.tensor && p.points() + q.points() <= bound {
                if !contains(&ops::tensor(p, q)) {
                    return false;
                }
            }
            if options.ops.compose
                && q.upper_len() == p.lower_len()
                && p.upper_len() + q.lower_len() <= bound
            {
                if let Ok(out) = ops::compose(q, p) {
                    if !contains(&out.result) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The one-colored base is all-white; exposed for tests that need the
/// explicit coloring.
pub fn white_identity() -> Partition {
    Partition::parse("[a | a]").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_matchings, all_partitions};

    fn parse(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn crossing() -> Partition {
        parse("[a b | b a]")
    }

    #[test]
    fn base_only_closure_is_noncrossing_pairs() {
        let options = ClosureOptions::new(6).with_margin(2).with_rotate(true);
        let result = close(&[], &options);
        assert!(!result.incomplete);
        for p in &result.members {
            assert!(p.is_pair(), "{p} is not a pair partition");
            assert!(p.is_noncrossing(), "{p} crosses");
        }
        // single-row layers are Catalan
        for (m, catalan) in [(2, 1), (4, 2), (6, 5)] {
            assert_eq!(result.layer(0, m).len(), catalan, "layer (0,{m})");
        }
        // oracle: every noncrossing matching is found
        for m in [2usize, 4, 6] {
            for p in all_matchings(m) {
                if p.is_noncrossing() {
                    assert!(result.contains(&p), "missing {p}");
                }
            }
        }
    }

    #[test]
    fn crossing_closure_is_all_pairs() {
        let options = ClosureOptions::new(6).with_margin(2).with_rotate(true);
        let result = close(&[crossing()], &options);
        assert!(!result.incomplete);
        for (m, count) in [(2, 1), (4, 3), (6, 15)] {
            assert_eq!(result.layer(0, m).len(), count, "layer (0,{m})");
        }
        for p in &result.members {
            assert!(p.is_pair());
        }
    }

    #[test]
    fn derivations_replay_to_their_partition() {
        let options = ClosureOptions::new(6).with_margin(2).with_rotate(true);
        let result = close(&[crossing()], &options);
        for p in &result.members {
            let d = &result.derivations[p];
            assert_eq!(&d.replay().unwrap(), p, "replay mismatch for {p}");
        }
    }

    #[test]
    fn identity_is_always_a_member() {
        let d = member(&[], &ClosureOptions::new(2), &white_identity()).unwrap();
        assert_eq!(d.replay().unwrap(), white_identity());
    }

    #[test]
    fn singleton_is_not_derivable_from_pairs() {
        let options = ClosureOptions::new(5).with_margin(3).with_rotate(true);
        assert!(member(&[], &options, &parse("[| a]")).is_none());
        // structural reason: pair-only closures keep all blocks even
        let result = close(&[crossing()], &options);
        for p in &result.members {
            assert!(p.has_even_blocks(), "odd block in {p}");
        }
    }

    #[test]
    fn monotonicity_of_generators() {
        let options = ClosureOptions::new(6).with_margin(2).with_rotate(true);
        let small = close(&[], &options);
        let large = close(&[crossing()], &options);
        for p in &small.members {
            assert!(large.contains(p), "monotonicity broken at {p}");
        }
        assert_eq!(compare(&[], &[crossing()], &options), Comparison::XinY);
        assert_eq!(compare(&[crossing()], &[crossing()], &options), Comparison::EqualAtBound);
    }

    #[test]
    fn idempotence_at_bound() {
        let options = ClosureOptions::new(4).with_margin(2).with_rotate(true);
        let once = close(&[crossing()], &options);
        let twice = close(&once.members, &options);
        assert_eq!(once.members, twice.members);
    }

    #[test]
    fn closure_output_is_a_category_at_bound() {
        let options = ClosureOptions::new(6).with_margin(2).with_rotate(true);
        let result = close(&[], &options);
        assert!(is_category_at_bound(&result.members, &options));
        // dropping a member breaks closedness
        let truncated: Vec<Partition> = result
            .members
            .iter()
            .filter(|p| p.points() < 4)
            .cloned()
            .collect();
        assert!(!is_category_at_bound(&truncated, &options));
        assert!(!is_category_at_bound(&[], &options));
    }

    #[test]
    fn two_colored_base_closure_keeps_blocks_even() {
        let options = ClosureOptions {
            two_colored: true,
            ..ClosureOptions::new(4).with_margin(2).with_rotate(true)
        };
        let result = close(&[], &options);
        assert!(!result.incomplete);
        for p in &result.members {
            assert!(p.is_pair(), "{p}");
        }
        assert!(result.contains(&parse("[| ao ax]")));
        assert!(result.contains(&parse("[ao | ao]")));
        // the one-colored pair is not in the two-colored base closure
        assert!(!result.contains(&parse("[| ao ao]")));
    }

    #[test]
    fn node_budget_flags_incomplete() {
        let options = ClosureOptions {
            node_budget: 4,
            ..ClosureOptions::new(6).with_margin(2)
        };
        let result = close(&[crossing()], &options);
        assert!(result.incomplete);
    }

    #[test]
    fn dump_format() {
        let options = ClosureOptions::new(2).with_margin(0);
        let result = close(&[], &options);
        let dump = result.dump(&options);
        let mut lines = dump.lines();
        assert!(lines.next().unwrap().starts_with("closure max_points=2 work_margin=0"));
        assert!(dump.contains("(1,1) [a | a] 0"));
        assert!(dump.contains("(0,2) [| a a] 0"));
    }

    #[test]
    fn sexp_and_depth() {
        let options = ClosureOptions::new(4).with_margin(0);
        let result = close(&[], &options);
        let four = parse("[| a a b b]");
        assert!(result.contains(&four));
        let d = &result.derivations[&four];
        assert!(d.depth() >= 1);
        assert!(d.sexp().contains("(base [| a a])"));
    }

    #[test]
    fn three_blocks_generate_noncrossing_layers() {
        let options = ClosureOptions::new(5).with_margin(2).with_rotate(true);
        let result = close(&[parse("[a a | a]"), parse("[a | a a]")], &options);
        assert!(!result.incomplete);
        for (m, catalan) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            assert_eq!(result.layer(0, m).len(), catalan, "layer (0,{m})");
        }
        for p in &result.members {
            assert!(p.is_noncrossing(), "{p}");
        }
        // oracle cross-check on the (0,4) layer
        for p in all_partitions(0, 4) {
            assert_eq!(result.contains(&p), p.is_noncrossing(), "{p}");
        }
    }
}
