//! Finite semigroups given by Cayley tables.
//!
//! Elements are dense indices `0..size`; labels are side metadata. The
//! table is validated for associativity on construction, so every value of
//! [`FiniteSemigroup`] is a genuine semigroup. All operations are pure
//! functions over immutable data.

use std::collections::HashMap;

use thiserror::Error;

use crate::budget::Budget;

/// Errors raised while validating tables, partitions, or quotients.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry out of range at ({row},{col}): {value} not below {size}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("not associative at ({i},{j},{k}): ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}")]
    NonAssociative {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },
    #[error("{labels} labels supplied for {size} elements")]
    LabelCountMismatch { labels: usize, size: usize },
    #[error("partition assigns {len} elements but the semigroup has {size}")]
    PartitionSizeMismatch { len: usize, size: usize },
    #[error("partition is not a congruence: {x} ~ {y} but translating by {s} separates them")]
    IncompatiblePartition { x: usize, y: usize, s: usize },
}

/// A partition of `0..size` into numbered blocks.
///
/// Block ids are canonical: block `0` is the block of the smallest element,
/// block `1` the block of the next element not in block `0`, and so on.
/// This makes partitions directly comparable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    block_count: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary block assignment.
    pub fn from_assignment(raw: &[usize]) -> Partition {
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(raw.len());
        for &b in raw {
            let next = rename.len();
            let id = *rename.entry(b).or_insert(next);
            block_of.push(id);
        }
        Partition {
            block_of,
            block_count: rename.len(),
        }
    }

    /// The discrete partition: every element in its own block.
    pub fn equality(size: usize) -> Partition {
        Partition {
            block_of: (0..size).collect(),
            block_count: size,
        }
    }

    /// The one-block partition.
    pub fn universal(size: usize) -> Partition {
        Partition {
            block_of: vec![0; size],
            block_count: if size == 0 { 0 } else { 1 },
        }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_equality(&self) -> bool {
        self.block_count == self.block_of.len()
    }

    /// Blocks as sorted element lists, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size());
        let mut image: Vec<Option<usize>> = vec![None; self.block_count];
        for x in 0..self.size() {
            let b = self.block_of[x];
            match image[b] {
                None => image[b] = Some(other.block_of[x]),
                Some(t) if t == other.block_of[x] => {}
                Some(_) => return false,
            }
        }
        true
    }

    /// Common refinement of two partitions.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.size(), other.size());
        let mut rename: HashMap<(usize, usize), usize> = HashMap::new();
        let mut raw = Vec::with_capacity(self.size());
        for x in 0..self.size() {
            let key = (self.block_of[x], other.block_of[x]);
            let next = rename.len();
            raw.push(*rename.entry(key).or_insert(next));
        }
        Partition::from_assignment(&raw)
    }
}

/// A congruence: a partition compatible with the operation on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    /// Validates compatibility and wraps the partition.
    pub fn new(s: &FiniteSemigroup, partition: Partition) -> Result<Congruence, SemigroupError> {
        if partition.size() != s.size() {
            return Err(SemigroupError::PartitionSizeMismatch {
                len: partition.size(),
                size: s.size(),
            });
        }
        for block in partition.blocks() {
            let r = block[0];
            for &x in &block[1..] {
                for t in 0..s.size() {
                    if !partition.same_block(s.product(t, x), s.product(t, r))
                        || !partition.same_block(s.product(x, t), s.product(r, t))
                    {
                        return Err(SemigroupError::IncompatiblePartition { x, y: r, s: t });
                    }
                }
            }
        }
        Ok(Congruence { partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn block_count(&self) -> usize {
        self.partition.block_count()
    }

    pub fn is_equality(&self) -> bool {
        self.partition.is_equality()
    }
}

/// Witness for non-aperiodicity: the power sequence of `element` enters a
/// cycle of length `cycle.len() > 1`; `cycle` lists the cycle members in
/// order, starting from the first repeated power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCycle {
    pub element: usize,
    pub cycle: Vec<usize>,
}

/// The four Green's relations, as partitions of the carrier.
#[derive(Debug, Clone)]
pub struct GreenRelations {
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
}

/// A table-preserving bijection between two semigroups of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

/// A finite semigroup presented by its Cayley table.
///
/// `table[i][j]` is the index of `x_i * x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    /// Validates a Cayley table: square, entries in range, associative.
    /// Detects and records a two-sided identity when one exists.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteSemigroup, SemigroupError> {
        let size = table.len();
        for (row, r) in table.iter().enumerate() {
            if r.len() != size {
                return Err(SemigroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: size,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= size {
                    return Err(SemigroupError::OutOfRangeEntry {
                        row,
                        col,
                        value,
                        size,
                    });
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                let ij = table[i][j];
                for k in 0..size {
                    let left = table[ij][k];
                    let right = table[i][table[j][k]];
                    if left != right {
                        return Err(SemigroupError::NonAssociative {
                            i,
                            j,
                            k,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != size {
                    return Err(SemigroupError::LabelCountMismatch {
                        labels: l.len(),
                        size,
                    });
                }
                l
            }
            None => (0..size).map(|i| format!("x{i}")).collect(),
        };
        let identity = (0..size).find(|&e| (0..size).all(|x| table[e][x] == x && table[x][e] == x));
        Ok(FiniteSemigroup {
            size,
            table,
            labels,
            identity,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    /// Index of the element with the given label, if any.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Returns `self` unchanged when an identity exists, otherwise appends
    /// a fresh identity element (labelled `"1"`).
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.size;
        let mut table = Vec::with_capacity(n + 1);
        for i in 0..n {
            let mut row = self.table[i].clone();
            row.push(i);
            table.push(row);
        }
        let mut last: Vec<usize> = (0..n).collect();
        last.push(n);
        table.push(last);
        let mut labels = self.labels.clone();
        labels.push("1".to_string());
        FiniteSemigroup {
            size: n + 1,
            table,
            labels,
            identity: Some(n),
        }
    }

    /// `None` when every element satisfies `x^k = x^{k+1}` for some
    /// `k <= size`; otherwise the first element whose powers cycle with
    /// period greater than one, together with that cycle.
    pub fn aperiodicity_witness(&self) -> Option<PowerCycle> {
        for x in 0..self.size {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut powers = vec![x];
            seen.insert(x, 0);
            loop {
                let next = self.product(*powers.last().unwrap(), x);
                if let Some(&start) = seen.get(&next) {
                    let cycle: Vec<usize> = powers[start..].to_vec();
                    if cycle.len() > 1 {
                        return Some(PowerCycle { element: x, cycle });
                    }
                    break;
                }
                seen.insert(next, powers.len());
                powers.push(next);
            }
        }
        None
    }

    pub fn is_aperiodic(&self) -> bool {
        self.aperiodicity_witness().is_none()
    }

    /// Green's relations computed over translates by `S^1`.
    pub fn green_relations(&self) -> GreenRelations {
        let s1 = self.adjoin_identity();
        let n = self.size;
        let right_set = |x: usize| -> Vec<bool> {
            let mut set = vec![false; n];
            for u in 0..s1.size() {
                set[s1.product(x, u)] = true;
            }
            set
        };
        let left_set = |x: usize| -> Vec<bool> {
            let mut set = vec![false; n];
            for u in 0..s1.size() {
                set[s1.product(u, x)] = true;
            }
            set
        };
        let two_sided_set = |x: usize| -> Vec<bool> {
            let mut set = vec![false; n];
            for u in 0..s1.size() {
                let ux = s1.product(u, x);
                for v in 0..s1.size() {
                    set[s1.product(ux, v)] = true;
                }
            }
            set
        };
        let group = |sets: Vec<Vec<bool>>| -> Partition {
            let mut ids: HashMap<Vec<bool>, usize> = HashMap::new();
            let mut raw = Vec::with_capacity(n);
            for set in sets {
                let next = ids.len();
                raw.push(*ids.entry(set).or_insert(next));
            }
            Partition::from_assignment(&raw)
        };
        let r = group((0..n).map(right_set).collect());
        let l = group((0..n).map(left_set).collect());
        let j = group((0..n).map(two_sided_set).collect());
        let h = r.meet(&l);
        GreenRelations { r, l, j, h }
    }

    pub fn is_j_trivial(&self) -> bool {
        self.green_relations().j.is_equality()
    }

    /// Smallest congruence identifying `x` and `y`, by closing the pair
    /// under left/right translations and transitivity.
    pub fn principal_congruence(&self, x: usize, y: usize) -> Congruence {
        assert!(x < self.size && y < self.size, "element index out of range");
        let mut parent: Vec<usize> = (0..self.size).collect();
        fn find(parent: &mut Vec<usize>, mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        let mut pending = Vec::new();
        let mut union = |parent: &mut Vec<usize>, pending: &mut Vec<(usize, usize)>, a, b| {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
                pending.push((lo, hi));
            }
        };
        union(&mut parent, &mut pending, x, y);
        while let Some((a, b)) = pending.pop() {
            for s in 0..self.size {
                union(
                    &mut parent,
                    &mut pending,
                    self.product(s, a),
                    self.product(s, b),
                );
                union(
                    &mut parent,
                    &mut pending,
                    self.product(a, s),
                    self.product(b, s),
                );
            }
        }
        let raw: Vec<usize> = (0..self.size).map(|e| find(&mut parent, e)).collect();
        let partition = Partition::from_assignment(&raw);
        Congruence::new(self, partition).expect("pair closure yields a congruence")
    }

    /// Quotient semigroup on the blocks of `c`. Well-definedness of the
    /// block product is asserted during construction.
    pub fn quotient(&self, c: &Congruence) -> Result<FiniteSemigroup, SemigroupError> {
        let partition = c.partition();
        if partition.size() != self.size {
            return Err(SemigroupError::PartitionSizeMismatch {
                len: partition.size(),
                size: self.size,
            });
        }
        let blocks = partition.blocks();
        let k = blocks.len();
        let mut table = vec![vec![0usize; k]; k];
        for (bi, bx) in blocks.iter().enumerate() {
            for (bj, by) in blocks.iter().enumerate() {
                let rep = partition.block_of(self.product(bx[0], by[0]));
                for &x in bx {
                    for &y in by {
                        if partition.block_of(self.product(x, y)) != rep {
                            return Err(SemigroupError::IncompatiblePartition {
                                x,
                                y: bx[0],
                                s: y,
                            });
                        }
                    }
                }
                table[bi][bj] = rep;
            }
        }
        let labels = blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    self.labels[b[0]].clone()
                } else {
                    let joined: Vec<&str> = b.iter().map(|&x| self.labels[x].as_str()).collect();
                    format!("{{{}}}", joined.join(","))
                }
            })
            .collect();
        FiniteSemigroup::from_table(table, Some(labels))
    }
}

/// Checks that `mapping` is a table-preserving bijection from `a` onto `b`.
pub fn is_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, mapping: &[usize]) -> bool {
    if a.size() != b.size() || mapping.len() != a.size() {
        return false;
    }
    let mut used = vec![false; b.size()];
    for &m in mapping {
        if m >= b.size() || used[m] {
            return false;
        }
        used[m] = true;
    }
    for x in 0..a.size() {
        for y in 0..a.size() {
            if mapping[a.product(x, y)] != b.product(mapping[x], mapping[y]) {
                return false;
            }
        }
    }
    true
}

/// Isomorphism-invariant fingerprint used to prune the search.
fn element_profiles(s: &FiniteSemigroup) -> Vec<(usize, usize, usize, usize, usize, bool)> {
    let n = s.size();
    let s1 = s.adjoin_identity();
    let mut factor_count = vec![0usize; n];
    for x in 0..n {
        for y in 0..n {
            factor_count[s.product(x, y)] += 1;
        }
    }
    (0..n)
        .map(|x| {
            // index and period of the cyclic subsemigroup generated by x
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut cur = x;
            let mut k = 0usize;
            let (mu, lam) = loop {
                if let Some(&first) = seen.get(&cur) {
                    break (first, k - first);
                }
                seen.insert(cur, k);
                cur = s.product(cur, x);
                k += 1;
            };
            let right = {
                let mut set = vec![false; n];
                for u in 0..s1.size() {
                    set[s1.product(x, u)] = true;
                }
                set.iter().filter(|&&b| b).count()
            };
            let left = {
                let mut set = vec![false; n];
                for u in 0..s1.size() {
                    set[s1.product(u, x)] = true;
                }
                set.iter().filter(|&&b| b).count()
            };
            let idem = s.product(x, x) == x;
            (mu, lam, right, left, factor_count[x], idem)
        })
        .collect()
}

/// Greedy generating set together with a derivation order: every carrier
/// element is either a generator or a product of two earlier entries.
struct Generation {
    generators: Vec<usize>,
    /// (element, None) for generators, (element, Some((a, b))) with
    /// element = a*b otherwise, in derivation order.
    order: Vec<(usize, Option<(usize, usize)>)>,
}

fn generation(s: &FiniteSemigroup) -> Generation {
    let n = s.size();
    let mut generators = Vec::new();
    let mut known = vec![false; n];
    let mut order: Vec<(usize, Option<(usize, usize)>)> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    for x in 0..n {
        if known[x] {
            continue;
        }
        generators.push(x);
        known[x] = true;
        order.push((x, None));
        members.push(x);
        // close under products with everything known so far
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for idx in 0..members.len() {
                let b = members[idx];
                for (p, q) in [(a, b), (b, a)] {
                    let prod = s.product(p, q);
                    if !known[prod] {
                        known[prod] = true;
                        order.push((prod, Some((p, q))));
                        members.push(prod);
                    }
                }
            }
        }
    }
    Generation { generators, order }
}

/// Searches for an isomorphism from `a` onto `b` with the default budget.
///
/// Profile-pruned backtracking over generator images; the full
/// homomorphism equation is re-checked before a witness is returned.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<IsoWitness> {
    find_isomorphism_with(a, b, &Budget::default())
}

/// Same as [`find_isomorphism`] with an explicit node budget. Best-effort:
/// exhausting the budget yields `None`.
pub fn find_isomorphism_with(
    a: &FiniteSemigroup,
    b: &FiniteSemigroup,
    budget: &Budget,
) -> Option<IsoWitness> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    if n == 0 {
        return Some(IsoWitness { mapping: vec![] });
    }
    let prof_a = element_profiles(a);
    let prof_b = element_profiles(b);
    {
        let mut sa = prof_a.clone();
        let mut sb = prof_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }
    let gen = generation(a);
    let candidates: Vec<Vec<usize>> = gen
        .generators
        .iter()
        .map(|&g| (0..n).filter(|&c| prof_b[c] == prof_a[g]).collect())
        .collect();

    struct Search<'a> {
        a: &'a FiniteSemigroup,
        b: &'a FiniteSemigroup,
        gen: &'a Generation,
        candidates: &'a [Vec<usize>],
        nodes: u64,
        max_nodes: u64,
    }

    impl Search<'_> {
        fn try_complete(&self, images: &[usize]) -> Option<Vec<usize>> {
            let n = self.a.size();
            let mut mapping = vec![usize::MAX; n];
            let mut used = vec![false; n];
            let mut gi = 0;
            for &(e, parents) in &self.gen.order {
                let img = match parents {
                    None => {
                        let img = images[gi];
                        gi += 1;
                        img
                    }
                    Some((p, q)) => self.b.product(mapping[p], mapping[q]),
                };
                if mapping[e] != usize::MAX {
                    if mapping[e] != img {
                        return None;
                    }
                    continue;
                }
                if used[img] {
                    return None;
                }
                mapping[e] = img;
                used[img] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    if mapping[self.a.product(x, y)] != self.b.product(mapping[x], mapping[y]) {
                        return None;
                    }
                }
            }
            Some(mapping)
        }

        fn assign(&mut self, pos: usize, images: &mut Vec<usize>) -> Option<Option<Vec<usize>>> {
            if self.nodes >= self.max_nodes {
                return None; // budget exhausted
            }
            self.nodes += 1;
            if pos == self.gen.generators.len() {
                return Some(self.try_complete(images));
            }
            for &cand in &self.candidates[pos] {
                if images.contains(&cand) {
                    continue;
                }
                images.push(cand);
                match self.assign(pos + 1, images) {
                    None => return None,
                    Some(Some(m)) => return Some(Some(m)),
                    Some(None) => {}
                }
                images.pop();
            }
            Some(None)
        }
    }

    let mut search = Search {
        a,
        b,
        gen: &gen,
        candidates: &candidates,
        nodes: 0,
        max_nodes: budget.max_search_nodes,
    };
    match search.assign(0, &mut Vec::new()) {
        Some(Some(mapping)) => {
            debug_assert!(is_isomorphism(a, b, &mapping));
            Some(IsoWitness { mapping })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero(n: usize) -> FiniteSemigroup {
        let table = (0..n).map(|i| vec![i; n]).collect();
        FiniteSemigroup::from_table(table, None).unwrap()
    }

    fn b1_table() -> Vec<Vec<usize>> {
        // elements: 0 = (1,1), 1 = theta
        vec![vec![0, 1], vec![1, 1]]
    }

    fn table1_monoid() -> FiniteSemigroup {
        let labels = vec!["f_a".into(), "f_b".into(), "f_c".into()];
        FiniteSemigroup::from_table(
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
            Some(labels),
        )
        .unwrap()
    }

    #[test]
    fn validates_b1_and_finds_identity() {
        let s = FiniteSemigroup::from_table(b1_table(), None).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn rejects_non_associative_table() {
        // x*y = y except 1*1 = 0: (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
        let table = vec![vec![0, 1], vec![0, 0]];
        let err = FiniteSemigroup::from_table(table, None).unwrap_err();
        assert!(matches!(err, SemigroupError::NonAssociative { .. }));
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let table = vec![vec![0, 2], vec![1, 1]];
        let err = FiniteSemigroup::from_table(table, None).unwrap_err();
        assert!(matches!(err, SemigroupError::OutOfRangeEntry { .. }));
    }

    #[test]
    fn table1_is_a_monoid_with_identity_fa() {
        let s = table1_monoid();
        assert_eq!(s.identity(), Some(0));
        assert_eq!(s.label(0), "f_a");
    }

    #[test]
    fn adjoin_identity_is_a_noop_on_monoids() {
        let s = table1_monoid();
        assert_eq!(s.adjoin_identity().size(), 3);
        let b1 = FiniteSemigroup::from_table(b1_table(), None).unwrap();
        assert_eq!(b1.adjoin_identity().size(), 2);
    }

    #[test]
    fn adjoin_identity_extends_identityless_semigroups() {
        let lz = left_zero(2);
        assert_eq!(lz.identity(), None);
        let ext = lz.adjoin_identity();
        assert_eq!(ext.size(), 3);
        assert_eq!(ext.identity(), Some(2));
        for x in 0..3 {
            assert_eq!(ext.product(2, x), x);
            assert_eq!(ext.product(x, 2), x);
        }
    }

    #[test]
    fn aperiodicity_of_small_semigroups() {
        assert!(table1_monoid().is_aperiodic());
        // Z_2 is not aperiodic; the cycle is the whole group.
        let z2 = FiniteSemigroup::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        let w = z2.aperiodicity_witness().unwrap();
        assert_eq!(w.cycle.len(), 2);
    }

    #[test]
    fn green_relations_on_table1() {
        let s = table1_monoid();
        let g = s.green_relations();
        assert!(g.j.is_equality());
        assert!(s.is_j_trivial());
    }

    #[test]
    fn green_relations_on_one_element() {
        let s = FiniteSemigroup::from_table(vec![vec![0]], None).unwrap();
        let g = s.green_relations();
        assert!(g.r.is_equality() && g.l.is_equality() && g.j.is_equality() && g.h.is_equality());
    }

    #[test]
    fn principal_congruence_of_a_pair_with_itself_is_equality() {
        let s = table1_monoid();
        let c = s.principal_congruence(1, 1);
        assert!(c.is_equality());
    }

    #[test]
    fn principal_congruence_glue_fa_fc_in_table1() {
        // f_b + f_a = f_b and f_b + f_c = f_c force f_b ~ f_c, so the
        // closure of {f_a ~ f_c} is the universal congruence.
        let s = table1_monoid();
        let c = s.principal_congruence(0, 2);
        assert_eq!(c.block_count(), 1);
    }

    #[test]
    fn quotient_by_equality_is_isomorphic() {
        let s = table1_monoid();
        let c = Congruence::new(&s, Partition::equality(3)).unwrap();
        let q = s.quotient(&c).unwrap();
        assert_eq!(q.table(), s.table());
    }

    #[test]
    fn quotient_by_universal_is_trivial() {
        let s = table1_monoid();
        let c = Congruence::new(&s, Partition::universal(3)).unwrap();
        let q = s.quotient(&c).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let s = table1_monoid();
        // {f_a, f_c | f_b} is not a congruence (checked in the glue test).
        let p = Partition::from_assignment(&[0, 1, 0]);
        assert!(Congruence::new(&s, p).is_err());
    }

    #[test]
    fn quotient_identifies_glued_pair() {
        let s = table1_monoid();
        let c = s.principal_congruence(1, 2);
        let p = c.partition();
        assert!(p.same_block(1, 2));
        let q = s.quotient(&c).unwrap();
        assert_eq!(q.size(), p.block_count());
    }

    #[test]
    fn isomorphism_search_finds_the_unique_table1_automorphism() {
        let s = table1_monoid();
        let w = find_isomorphism(&s, &s).unwrap();
        assert_eq!(w.mapping, vec![0, 1, 2]);
    }

    #[test]
    fn no_isomorphism_between_b1_and_left_zero() {
        let b1 = FiniteSemigroup::from_table(b1_table(), None).unwrap();
        let lz = left_zero(2);
        assert!(find_isomorphism(&b1, &lz).is_none());
    }

    #[test]
    fn isomorphism_witness_respects_products() {
        // cyclic group Z_3 with two different generators listed first
        let z3 = FiniteSemigroup::from_table(
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            None,
        )
        .unwrap();
        let relabeled = FiniteSemigroup::from_table(
            vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]],
            None,
        )
        .unwrap();
        let w = find_isomorphism(&z3, &relabeled).unwrap();
        assert!(is_isomorphism(&z3, &relabeled, &w.mapping));
    }
}
