//! Weyl groups as fully enumerated contexts.
//!
//! A [`WeylGroup`] enumerates every element once, in ShortLex order of the
//! lexicographically least reduced word, and interns it. Elements are then
//! cheap copyable handles ([`WeylElement`]) tagged with the id of the group
//! that produced them. The canonical form of an element is the tuple of images
//! `w(alpha_1), ..., w(alpha_l)` in simple-root coordinates.
//!
//! Generator indices are 0-based in the Rust API and 1-based in every text
//! format (`"1,2,1"`, `"e"`).

mod he;
mod parabolic;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::sync::atomic::{AtomicU32, Ordering};

use crate::bits::{BitMatrix, BitSet};
use crate::rootsys::RootSystem;
use crate::{Error, Result};

pub use he::{HeCounterexample, HeReport};
pub use parabolic::ParabolicSet;

/// Groups up to this order get an eagerly materialized Bruhat relation.
const BRUHAT_TABLE_LIMIT: usize = 4096;
/// Groups up to this order get a full multiplication table.
const MUL_TABLE_LIMIT: usize = 1024;

static NEXT_GROUP_ID: AtomicU32 = AtomicU32::new(0);

/// Handle to an element of a specific [`WeylGroup`].
///
/// Ordering within one group is ShortLex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    group: u32,
    index: u32,
}

impl WeylElement {
    /// Position in the ShortLex enumeration of the group.
    pub fn index(self) -> usize {
        self.index as usize
    }
}

#[derive(Debug)]
pub struct WeylGroup {
    id: u32,
    roots: RootSystem,
    rank: usize,
    /// `order * rank * rank` coordinates; row `j` of element `x` is `x(alpha_j)`.
    canon: Vec<i32>,
    lengths: Vec<u32>,
    words: Vec<Vec<u8>>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
    lookup: BTreeMap<Vec<i32>, u32>,
    longest: u32,
    bruhat: Option<BitMatrix>,
    mul_table: Option<Vec<u32>>,
}

impl WeylGroup {
    /// Enumerates the group, failing if it has more than `max_order` elements.
    pub fn new(roots: RootSystem, max_order: usize) -> Result<Self> {
        let l = roots.rank();
        let mut identity = vec![0i32; l * l];
        for j in 0..l {
            identity[j * l + j] = 1;
        }

        let mut canon: Vec<i32> = Vec::new();
        let mut lengths: Vec<u32> = Vec::new();
        let mut words: Vec<Vec<u8>> = Vec::new();
        let mut lookup: BTreeMap<Vec<i32>, u32> = BTreeMap::new();

        canon.extend_from_slice(&identity);
        lengths.push(0);
        words.push(Vec::new());
        lookup.insert(identity, 0);

        let mut layer_start = 0usize;
        let mut length = 0u32;
        loop {
            let layer_end = lengths.len();
            // Next layer: right multiples x s_i with x(alpha_i) > 0.
            let mut fresh: BTreeMap<Vec<i32>, ()> = BTreeMap::new();
            for x in layer_start..layer_end {
                let cx = &canon[x * l * l..(x + 1) * l * l];
                for i in 0..l {
                    if is_negative(&cx[i * l..(i + 1) * l]) {
                        continue;
                    }
                    let y = right_multiply(&roots, cx, i);
                    if !lookup.contains_key(&y) {
                        fresh.insert(y, ());
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            if layer_end + fresh.len() > max_order {
                return Err(Error::GroupTooLarge { bound: max_order });
            }
            length += 1;
            let mut layer: Vec<(Vec<u8>, Vec<i32>)> = fresh
                .into_keys()
                .map(|c| {
                    // Least reduced word: smallest left descent, then recurse.
                    let (i, rest) = (0..l)
                        .find_map(|i| {
                            let shorter = left_multiply(&roots, &c, i);
                            lookup
                                .get(&shorter)
                                .filter(|&&idx| lengths[idx as usize] + 1 == length)
                                .map(|&idx| (i, idx))
                        })
                        .expect("every non-identity element has a left descent");
                    let mut word = Vec::with_capacity(length as usize);
                    word.push(i as u8);
                    word.extend_from_slice(&words[rest as usize]);
                    (word, c)
                })
                .collect();
            layer.sort();
            for (word, c) in layer {
                let idx = lengths.len() as u32;
                canon.extend_from_slice(&c);
                lengths.push(length);
                words.push(word);
                lookup.insert(c, idx);
            }
            layer_start = layer_end;
        }

        let order = lengths.len();
        let mut right = vec![0u32; order * l];
        let mut left = vec![0u32; order * l];
        for x in 0..order {
            let cx = &canon[x * l * l..(x + 1) * l * l];
            for i in 0..l {
                right[x * l + i] = lookup[&right_multiply(&roots, cx, i)];
                left[x * l + i] = lookup[&left_multiply(&roots, cx, i)];
            }
        }
        let mut inverse = vec![0u32; order];
        for (x, word) in words.iter().enumerate() {
            inverse[x] = word.iter().rev().fold(0u32, |acc, &i| right[acc as usize * l + i as usize]);
        }

        let mut group = Self {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            roots,
            rank: l,
            canon,
            lengths,
            words,
            right,
            left,
            inverse,
            lookup,
            longest: (order - 1) as u32,
            bruhat: None,
            mul_table: None,
        };
        if order <= MUL_TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for x in 0..order {
                for y in 0..order {
                    table[x * order + y] = group.walk_right(x as u32, y as u32);
                }
            }
            group.mul_table = Some(table);
        }
        if order <= BRUHAT_TABLE_LIMIT {
            group.bruhat = Some(group.bruhat_table());
        }
        Ok(group)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    fn handle(&self, index: u32) -> WeylElement {
        WeylElement { group: self.id, index }
    }

    #[inline]
    fn idx(&self, x: WeylElement) -> u32 {
        assert_eq!(x.group, self.id, "element belongs to a different Weyl group");
        x.index
    }

    /// Whether `x` was produced by this group.
    pub fn owns(&self, x: WeylElement) -> bool {
        x.group == self.id
    }

    pub fn identity(&self) -> WeylElement {
        self.handle(0)
    }

    /// The longest element `w0` (last in ShortLex order).
    pub fn w0(&self) -> WeylElement {
        self.handle(self.longest)
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.rank {
            return Err(Error::GeneratorOutOfRange { index: i, rank: self.rank });
        }
        Ok(self.handle(self.right[i]))
    }

    /// All elements in ShortLex order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(|i| self.handle(i))
    }

    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        self.handle(index as u32)
    }

    /// Product of the generators in `word` (0-based), in any form.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut x = 0u32;
        for &i in word {
            if i >= self.rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank: self.rank });
            }
            x = self.right[x as usize * self.rank + i];
        }
        Ok(self.handle(x))
    }

    /// Looks up an element by its canonical form.
    pub fn from_canonical(&self, form: &[i32]) -> Option<WeylElement> {
        self.lookup.get(form).map(|&i| self.handle(i))
    }

    /// `rank * rank` coordinates; entries `[j*rank .. (j+1)*rank]` are `x(alpha_j)`.
    pub fn canonical_form(&self, x: WeylElement) -> &[i32] {
        let i = self.idx(x) as usize;
        let ll = self.rank * self.rank;
        &self.canon[i * ll..(i + 1) * ll]
    }

    /// ShortLex-least reduced word, 0-based generators.
    pub fn reduced_word(&self, x: WeylElement) -> Vec<usize> {
        self.words[self.idx(x) as usize].iter().map(|&i| i as usize).collect()
    }

    /// 1-based comma-separated reduced word, `e` for the identity.
    pub fn format(&self, x: WeylElement) -> String {
        let word = &self.words[self.idx(x) as usize];
        if word.is_empty() {
            return "e".to_string();
        }
        let mut out = String::new();
        for (k, i) in word.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", i + 1);
        }
        out
    }

    /// Parses `e`, the empty string, or a comma-separated 1-based word; the
    /// word need not be reduced.
    pub fn parse(&self, text: &str) -> Result<WeylElement> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(self.identity());
        }
        let err = |reason: String| Error::Parse { input: t.to_string(), reason };
        let mut word = Vec::new();
        for part in t.split(',') {
            let part = part.trim();
            let g: usize = part
                .parse()
                .map_err(|_| err(alloc::format!("`{part}` is not a generator index")))?;
            if g == 0 || g > self.rank {
                return Err(err(alloc::format!("generator {g} not in 1..={}", self.rank)));
            }
            word.push(g - 1);
        }
        self.from_word(&word)
    }

    pub fn length(&self, x: WeylElement) -> usize {
        self.lengths[self.idx(x) as usize] as usize
    }

    /// Number of positive roots sent to negative roots, computed from the
    /// canonical form (independent of the stored length).
    pub fn inversion_count(&self, x: WeylElement) -> usize {
        let form = self.canonical_form(x);
        let l = self.rank;
        let mut image = vec![0i32; l];
        self.roots
            .positive_roots()
            .iter()
            .filter(|root| {
                image.iter_mut().for_each(|c| *c = 0);
                for (j, &cj) in root.coords().iter().enumerate() {
                    if cj != 0 {
                        for (k, c) in image.iter_mut().enumerate() {
                            *c += cj * form[j * l + k];
                        }
                    }
                }
                is_negative(&image)
            })
            .count()
    }

    /// Checked product; fails if the operands come from other groups.
    pub fn multiply(&self, x: WeylElement, y: WeylElement) -> Result<WeylElement> {
        if !self.owns(x) || !self.owns(y) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul(x, y))
    }

    /// Product `xy`. Panics on elements of another group.
    #[inline]
    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        let (a, b) = (self.idx(x), self.idx(y));
        let r = match &self.mul_table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => self.walk_right(a, b),
        };
        self.handle(r)
    }

    fn walk_right(&self, x: u32, y: u32) -> u32 {
        self.words[y as usize]
            .iter()
            .fold(x, |acc, &i| self.right[acc as usize * self.rank + i as usize])
    }

    pub fn inverse(&self, x: WeylElement) -> WeylElement {
        self.handle(self.inverse[self.idx(x) as usize])
    }

    /// `x s_i`.
    #[inline]
    pub fn mul_simple_right(&self, x: WeylElement, i: usize) -> WeylElement {
        self.handle(self.right[self.idx(x) as usize * self.rank + i])
    }

    /// `s_i x`.
    #[inline]
    pub fn mul_simple_left(&self, x: WeylElement, i: usize) -> WeylElement {
        self.handle(self.left[self.idx(x) as usize * self.rank + i])
    }

    /// `{ i : l(x s_i) < l(x) }`.
    pub fn descents_right(&self, x: WeylElement) -> ParabolicSet {
        let len = self.length(x);
        ParabolicSet::from_indices(
            (0..self.rank).filter(|&i| self.length(self.mul_simple_right(x, i)) < len),
        )
    }

    /// `{ i : l(s_i x) < l(x) }`.
    pub fn descents_left(&self, x: WeylElement) -> ParabolicSet {
        let len = self.length(x);
        ParabolicSet::from_indices(
            (0..self.rank).filter(|&i| self.length(self.mul_simple_left(x, i)) < len),
        )
    }

    /// Generators occurring in a (equivalently, every) reduced word of `x`.
    pub fn support(&self, x: WeylElement) -> ParabolicSet {
        ParabolicSet::from_indices(self.words[self.idx(x) as usize].iter().map(|&i| i as usize))
    }

    /// Bruhat order `x <= y`.
    pub fn bruhat_leq(&self, x: WeylElement, y: WeylElement) -> bool {
        let (a, b) = (self.idx(x), self.idx(y));
        match &self.bruhat {
            Some(table) => table.get(b as usize, a as usize),
            None => self.bruhat_descend(a, b),
        }
    }

    /// Descent recursion: with `s y < y`, `x <= y` iff `s x <= s y` when
    /// `s x < x` and `x <= s y` otherwise. Both branches are tail calls.
    fn bruhat_descend(&self, mut x: u32, mut y: u32) -> bool {
        let l = self.rank;
        loop {
            let (lx, ly) = (self.lengths[x as usize], self.lengths[y as usize]);
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let i = self.words[y as usize][0] as usize;
            let sx = self.left[x as usize * l + i];
            if self.lengths[sx as usize] < lx {
                x = sx;
            }
            y = self.left[y as usize * l + i];
        }
    }

    /// Row `y` holds every `x <= y`, filled in ShortLex order from the row of
    /// `s_i y` where `i` is the first letter of `y`.
    fn bruhat_table(&self) -> BitMatrix {
        let n = self.order();
        let l = self.rank;
        let mut rows: Vec<BitSet> = Vec::with_capacity(n);
        let mut first = BitSet::new(n);
        first.insert(0);
        rows.push(first);
        for y in 1..n {
            let i = self.words[y][0] as usize;
            let sy = self.left[y * l + i] as usize;
            let mut row = BitSet::new(n);
            for x in 0..n {
                let sx = self.left[x * l + i] as usize;
                let below = if self.lengths[sx] < self.lengths[x] {
                    rows[sy].contains(sx)
                } else {
                    rows[sy].contains(x)
                };
                if below {
                    row.insert(x);
                }
            }
            rows.push(row);
        }
        BitMatrix::from_rows(rows)
    }
}

#[inline]
fn is_negative(v: &[i32]) -> bool {
    v.iter().any(|&c| c < 0)
}

/// Canonical form of `x s_i`: `x s_i(alpha_j) = x(alpha_j) - a[i][j] x(alpha_i)`.
fn right_multiply(roots: &RootSystem, form: &[i32], i: usize) -> Vec<i32> {
    let l = roots.rank();
    let mut out = form.to_vec();
    let ai: Vec<i32> = form[i * l..(i + 1) * l].to_vec();
    for j in 0..l {
        let a = roots.cartan().entry(i, j);
        if a != 0 {
            for k in 0..l {
                out[j * l + k] -= a * ai[k];
            }
        }
    }
    out
}

/// Canonical form of `s_i x`: apply `s_i` to every image.
fn left_multiply(roots: &RootSystem, form: &[i32], i: usize) -> Vec<i32> {
    let l = roots.rank();
    let mut out = form.to_vec();
    for j in 0..l {
        roots.reflect_coords(i, &mut out[j * l..(j + 1) * l]);
    }
    out
}
