//! Plane forests, signed labelings and linear extensions.
//!
//! Vertices are identified by their position in depth-first preorder
//! (0-based): a root comes before its subtree, subtrees of siblings appear
//! left to right, trees left to right. With this indexing the subtree of
//! `v` is exactly the index range `v..v + h_v`, which every ancestor query
//! below relies on.
//!
//! The poset order puts roots at the top: `u <_F v` iff `u` lies in the
//! proper subtree of `v`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex index in preorder, 0-based.
pub type Vertex = usize;

/// Subtree sizes, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookVector(Vec<u32>);

impl HookVector {
    pub fn product(&self) -> u64 {
        self.0.iter().map(|&h| h as u64).product()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for HookVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    roots: Vec<Vertex>,
    hooks: HookVector,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::from_preorder_parents(Vec::new())
    }

    /// A single path `0 > 1 > ... > n-1`, vertex 0 being the root.
    pub fn chain(n: usize) -> Self {
        let parent = (0..n).map(|v| v.checked_sub(1)).collect();
        Forest::from_preorder_parents(parent)
    }

    /// `n` isolated vertices.
    pub fn antichain(n: usize) -> Self {
        Forest::from_preorder_parents(vec![None; n])
    }

    /// Builds a forest from a parent vector that is already in preorder.
    /// Callers guarantee the preorder property.
    fn from_preorder_parents(parent: Vec<Option<Vertex>>) -> Self {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (v, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(v),
                None => roots.push(v),
            }
        }
        let mut hooks = vec![1u32; n];
        for v in (0..n).rev() {
            if let Some(p) = parent[v] {
                hooks[p] += hooks[v];
            }
        }
        Forest {
            parent,
            children,
            roots,
            hooks: HookVector(hooks),
        }
    }

    /// Parses the balanced-parenthesis encoding, e.g. `"(()())()"`.
    ///
    /// A leading `[` switches to the parent-array form, see
    /// [`Forest::parse_parent_array`].
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            return Forest::parse_parent_array(text);
        }
        let mut parent = Vec::new();
        let mut stack: Vec<Vertex> = Vec::new();
        for (offset, byte) in text.bytes().enumerate() {
            match byte {
                b'(' => {
                    parent.push(stack.last().copied());
                    stack.push(parent.len() - 1);
                }
                b')' => {
                    if stack.pop().is_none() {
                        return Err(Error::Parse {
                            offset,
                            message: "unmatched `)`".into(),
                        });
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        offset,
                        message: format!("unexpected character {:?}", byte as char),
                    })
                }
            }
        }
        if !stack.is_empty() {
            return Err(Error::Parse {
                offset: text.len(),
                message: format!("{} unclosed `(`", stack.len()),
            });
        }
        Ok(Forest::from_preorder_parents(parent))
    }

    /// Parses `"[0,1,1,0]"`: entry `i` is the 1-based parent of vertex `i+1`,
    /// `0` marking a root.
    pub fn parse_parent_array(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: "parent array must be enclosed in `[` `]`".into(),
            })?;
        let base = text.find('[').unwrap_or(0) + 1;
        let mut parents = Vec::new();
        if !inner.trim().is_empty() {
            let mut offset = base;
            for item in inner.split(',') {
                let value = item.trim().parse::<usize>().map_err(|_| Error::Parse {
                    offset,
                    message: format!("expected a nonnegative integer, found {:?}", item.trim()),
                })?;
                parents.push(value);
                offset += item.len() + 1;
            }
        }
        Forest::from_parent_array(&parents)
    }

    /// Builds a forest from 1-based parents (`0` = root) in arbitrary vertex
    /// order. Siblings and roots are ordered by their input index; the
    /// result is re-indexed into preorder.
    pub fn from_parent_array(parents: &[usize]) -> Result<Self> {
        let n = parents.len();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (v, &p) in parents.iter().enumerate() {
            match p {
                0 => roots.push(v),
                p if p <= n && p - 1 != v => children[p - 1].push(v),
                p => {
                    return Err(Error::Parse {
                        offset: v,
                        message: format!("invalid parent {p} for vertex {}", v + 1),
                    })
                }
            }
        }
        let mut parent = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut stack: Vec<(Vertex, Option<Vertex>)> =
            roots.iter().rev().map(|&r| (r, None)).collect();
        while let Some((v, p)) = stack.pop() {
            seen[v] = true;
            let idx = parent.len();
            parent.push(p);
            for &c in children[v].iter().rev() {
                stack.push((c, Some(idx)));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Parse {
                offset: v,
                message: format!("vertex {} lies on a cycle", v + 1),
            });
        }
        Ok(Forest::from_preorder_parents(parent))
    }

    /// 1-based parent array in preorder, `0` for roots.
    pub fn to_parent_array(&self) -> Vec<usize> {
        self.parent.iter().map(|p| p.map_or(0, |p| p + 1)).collect()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn roots(&self) -> &[Vertex] {
        &self.roots
    }

    pub fn is_root(&self, v: Vertex) -> bool {
        self.parent[v].is_none()
    }

    pub fn is_tree(&self) -> bool {
        self.roots.len() == 1
    }

    /// True when every vertex has at most one child and there is one root.
    pub fn is_chain(&self) -> bool {
        self.len() <= 1 || (self.is_tree() && self.children.iter().all(|c| c.len() <= 1))
    }

    pub fn hook_lengths(&self) -> &HookVector {
        &self.hooks
    }

    pub fn hook(&self, v: Vertex) -> u32 {
        self.hooks[v]
    }

    /// Vertices of the subtree rooted at `v`, `v` included.
    pub fn subtree(&self, v: Vertex) -> std::ops::Range<Vertex> {
        v..v + self.hooks[v] as usize
    }

    /// `b <_F a`: `b` lies in the proper subtree of `a`.
    pub fn is_strict_ancestor(&self, a: Vertex, b: Vertex) -> Result<bool> {
        let n = self.len();
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, size: n });
            }
        }
        Ok(self.strictly_above(a, b))
    }

    #[inline]
    pub(crate) fn strictly_above(&self, a: Vertex, b: Vertex) -> bool {
        a < b && b < a + self.hooks[a] as usize
    }

    /// The forest left after deleting the root of a tree. Because the root
    /// is vertex 0, vertex `v + 1` of `self` becomes vertex `v` of the result.
    pub fn without_root(&self) -> Option<Forest> {
        if !self.is_tree() {
            return None;
        }
        let parent = self.parent[1..]
            .iter()
            .map(|p| p.and_then(|p| p.checked_sub(1)))
            .collect();
        Some(Forest::from_preorder_parents(parent))
    }

    /// Ancestor-descendant pairs `(a, d)` with `d <_F a`.
    pub fn comparable_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.len()).flat_map(move |a| (a + 1..a + self.hooks[a] as usize).map(move |d| (a, d)))
    }

    /// Balanced-parenthesis rendering; inverse of [`Forest::parse`].
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        // Preorder with explicit closing: after vertex v, close every
        // subtree that ends at v.
        let mut open: Vec<Vertex> = Vec::new();
        for v in 0..self.len() {
            while let Some(&top) = open.last() {
                if self.strictly_above(top, v) {
                    break;
                }
                open.pop();
                out.push(')');
            }
            out.push('(');
            open.push(v);
        }
        for _ in open {
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Forest::parse(s)
    }
}

/// Which labelings a sweep ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    /// All labels positive.
    Ordinary,
    /// Any sign pattern.
    Signed,
    /// An even number of negative labels.
    EvenSigned,
}

impl SignMode {
    pub fn name(self) -> &'static str {
        match self {
            SignMode::Ordinary => "ordinary",
            SignMode::Signed => "signed",
            SignMode::EvenSigned => "even-signed",
        }
    }

    pub fn admits(self, word: &[i32]) -> bool {
        let negatives = word.iter().filter(|&&x| x < 0).count();
        match self {
            SignMode::Ordinary => negatives == 0,
            SignMode::Signed => true,
            SignMode::EvenSigned => negatives % 2 == 0,
        }
    }

    /// Number of words of length `n` in this mode.
    pub fn count(self, n: usize) -> u128 {
        let fact: u128 = (1..=n as u128).product();
        match self {
            SignMode::Ordinary => fact,
            SignMode::Signed => fact << n,
            SignMode::EvenSigned if n == 0 => 1,
            SignMode::EvenSigned => fact << (n - 1),
        }
    }
}

impl fmt::Display for SignMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(SignMode::Ordinary),
            "signed" => Ok(SignMode::Signed),
            "even-signed" | "even" => Ok(SignMode::EvenSigned),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

pub(crate) fn validate_word(values: &[i32]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &x in values {
        let a = x.unsigned_abs() as usize;
        if a == 0 || a > n {
            return Err(Error::InvalidLabeling(format!(
                "value {x} outside ±1..={n}"
            )));
        }
        if std::mem::replace(&mut seen[a], true) {
            return Err(Error::InvalidLabeling(format!(
                "absolute value {a} used twice"
            )));
        }
    }
    Ok(())
}

/// A signed labeling, stored in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedLabeling(Vec<i32>);

impl SignedLabeling {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        validate_word(&values)?;
        Ok(SignedLabeling(values))
    }

    /// Checks that the labeling fits `forest` and `mode`.
    pub fn for_forest(forest: &Forest, values: Vec<i32>, mode: SignMode) -> Result<Self> {
        if values.len() != forest.len() {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for a forest on {} vertices",
                values.len(),
                forest.len()
            )));
        }
        let labeling = SignedLabeling::new(values)?;
        if !mode.admits(&labeling) {
            return Err(match mode {
                SignMode::EvenSigned => Error::OddSignCount,
                _ => Error::InvalidLabeling(format!("labels are not {mode}")),
            });
        }
        Ok(labeling)
    }

    /// Parses `"-1,2,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut offset = 0;
        if !text.trim().is_empty() {
            for item in text.split(',') {
                let v = item.trim().parse::<i32>().map_err(|_| Error::Parse {
                    offset,
                    message: format!("expected a nonzero integer, found {:?}", item.trim()),
                })?;
                values.push(v);
                offset += item.len() + 1;
            }
        }
        SignedLabeling::new(values)
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    pub fn is_even(&self) -> bool {
        SignMode::EvenSigned.admits(&self.0)
    }
}

impl Deref for SignedLabeling {
    type Target = [i32];

    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for SignedLabeling {
    type Error = Error;

    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedLabeling::new(v)
    }
}

impl From<SignedLabeling> for Vec<i32> {
    fn from(l: SignedLabeling) -> Self {
        l.0
    }
}

impl fmt::Display for SignedLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[i32]) -> fmt::Result {
    for (i, x) in word.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Every plane forest on `n` vertices, in lexicographic order of the
/// parenthesis encoding (`(` before `)`).
pub fn enumerate_forests(n: usize) -> Forests {
    Forests { n, word: None, done: false }
}

/// Iterator over Dyck words; see [`enumerate_forests`].
#[derive(Debug, Clone)]
pub struct Forests {
    n: usize,
    word: Option<Vec<bool>>,
    done: bool,
}

impl Forests {
    fn advance(&mut self) -> bool {
        let n = self.n;
        let Some(word) = self.word.as_mut() else {
            let mut w = vec![true; n];
            w.extend(std::iter::repeat_n(false, n));
            self.word = Some(w);
            return true;
        };
        let mut opens: usize = word.iter().filter(|&&b| b).count();
        let mut closes = 2 * n - opens;
        for i in (0..2 * n).rev() {
            if word[i] {
                opens -= 1;
            } else {
                closes -= 1;
            }
            // opens/closes now count the prefix before i
            if word[i] && closes < opens {
                word[i] = false;
                let open_left = n - opens;
                for (k, slot) in word[i + 1..].iter_mut().enumerate() {
                    *slot = k < open_left;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Forests {
    type Item = Forest;

    fn next(&mut self) -> Option<Forest> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        let text: String = self
            .word
            .as_ref()
            .expect("advanced")
            .iter()
            .map(|&b| if b { '(' } else { ')' })
            .collect();
        Some(Forest::parse(&text).expect("Dyck word"))
    }
}

/// Lexicographically ordered words of length `n` whose absolute values
/// form a permutation of `1..=n`, restricted to `mode`.
pub fn signed_words(n: usize, mode: SignMode) -> SignedWords {
    let candidates: Vec<i32> = match mode {
        SignMode::Ordinary => (1..=n as i32).collect(),
        _ => (-(n as i32)..=-1).chain(1..=n as i32).collect(),
    };
    SignedWords {
        n,
        mode,
        candidates,
        choice: Vec::with_capacity(n),
        used: vec![false; n + 1],
        started: false,
        done: false,
    }
}

/// Backtracking iterator behind [`signed_words`] and [`enumerate_labelings`].
#[derive(Debug, Clone)]
pub struct SignedWords {
    n: usize,
    mode: SignMode,
    candidates: Vec<i32>,
    choice: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl SignedWords {
    fn abs_of(&self, c: usize) -> usize {
        self.candidates[c].unsigned_abs() as usize
    }

    fn fill(&mut self) {
        while self.choice.len() < self.n {
            let c = (0..self.candidates.len())
                .find(|&c| !self.used[self.abs_of(c)])
                .expect("an unused value remains");
            let a = self.abs_of(c);
            self.used[a] = true;
            self.choice.push(c);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        while let Some(c) = self.choice.pop() {
            let a = self.abs_of(c);
            self.used[a] = false;
            if let Some(next) = (c + 1..self.candidates.len()).find(|&k| !self.used[self.abs_of(k)]) {
                let a = self.abs_of(next);
                self.used[a] = true;
                self.choice.push(next);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for SignedWords {
    type Item = Vec<i32>;

    fn next(&mut self) -> Option<Vec<i32>> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let word: Vec<i32> = self.choice.iter().map(|&c| self.candidates[c]).collect();
            if self.mode.admits(&word) {
                return Some(word);
            }
        }
        None
    }
}

/// Every labeling of `forest` in `mode`, lexicographic by value vector.
pub fn enumerate_labelings(forest: &Forest, mode: SignMode) -> impl Iterator<Item = SignedLabeling> {
    signed_words(forest.len(), mode).map(SignedLabeling)
}

/// Words `w(x_1)…w(x_n)` over all orders that list each vertex after its
/// whole subtree, sorted lexicographically.
pub fn linear_extensions(forest: &Forest, labeling: &[i32]) -> Vec<Vec<i32>> {
    let n = forest.len();
    assert_eq!(labeling.len(), n, "labeling length must match forest size");
    let mut pending: Vec<usize> = (0..n).map(|v| forest.children(v).len()).collect();
    let mut placed = vec![false; n];
    let mut word = Vec::with_capacity(n);
    let mut out = Vec::new();
    // Picking available vertices in increasing label order yields words in
    // lexicographic order.
    let mut by_label: Vec<Vertex> = (0..n).collect();
    by_label.sort_by_key(|&v| labeling[v]);
    extend(forest, labeling, &by_label, &mut pending, &mut placed, &mut word, &mut out);
    out
}

fn extend(
    forest: &Forest,
    labeling: &[i32],
    by_label: &[Vertex],
    pending: &mut [usize],
    placed: &mut [bool],
    word: &mut Vec<i32>,
    out: &mut Vec<Vec<i32>>,
) {
    if word.len() == labeling.len() {
        out.push(word.clone());
        return;
    }
    for &v in by_label {
        if placed[v] || pending[v] != 0 {
            continue;
        }
        placed[v] = true;
        word.push(labeling[v]);
        if let Some(p) = forest.parent(v) {
            pending[p] -= 1;
        }
        extend(forest, labeling, by_label, pending, placed, word, out);
        if let Some(p) = forest.parent(v) {
            pending[p] += 1;
        }
        word.pop();
        placed[v] = false;
    }
}

/// An ordinary labeling decreasing toward the leaves: vertices are
/// numbered `1..=n` in postorder.
pub fn decreasing_labeling(forest: &Forest) -> SignedLabeling {
    let n = forest.len();
    let mut values = vec![0i32; n];
    let mut next = 1;
    let mut stack: Vec<(Vertex, bool)> = forest.roots().iter().rev().map(|&r| (r, false)).collect();
    while let Some((v, expanded)) = stack.pop() {
        if expanded {
            values[v] = next;
            next += 1;
        } else {
            stack.push((v, true));
            for &c in forest.children(v).iter().rev() {
                stack.push((c, false));
            }
        }
    }
    SignedLabeling(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Forest {
        Forest::parse(s).unwrap()
    }

    #[test]
    fn parse_small_forests() {
        assert_eq!(f("()").len(), 1);
        let chain = f("(())");
        assert_eq!(chain.parent(1), Some(0));
        assert_eq!(chain.roots(), &[0]);
        let g = f("(()())()");
        assert_eq!(g.len(), 4);
        assert_eq!(&**g.hook_lengths(), &[3, 1, 1, 1]);
        assert_eq!(g.roots(), &[0, 3]);
        assert_eq!(g.children(0), &[1, 2]);
        assert_eq!(f("").len(), 0);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            Forest::parse("())").unwrap_err(),
            Error::Parse { offset: 2, message: "unmatched `)`".into() }
        );
        assert!(matches!(Forest::parse("(x)"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(Forest::parse("(()"), Err(Error::Parse { offset: 3, .. })));
    }

    #[test]
    fn hooks() {
        assert_eq!(&**f("()").hook_lengths(), &[1]);
        assert_eq!(&**f("(())").hook_lengths(), &[2, 1]);
        assert_eq!(&**f("(()())").hook_lengths(), &[3, 1, 1]);
        assert_eq!(f("(()())").hook_lengths().product(), 3);
    }

    #[test]
    fn ancestors() {
        let chain = f("(())");
        assert!(chain.is_strict_ancestor(0, 1).unwrap());
        assert!(!chain.is_strict_ancestor(1, 0).unwrap());
        let g = f("(()())()");
        assert!(!g.is_strict_ancestor(0, 3).unwrap());
        assert!(!g.is_strict_ancestor(0, 0).unwrap());
        assert_eq!(
            g.is_strict_ancestor(0, 4),
            Err(Error::VertexOutOfRange { vertex: 4, size: 4 })
        );
    }

    #[test]
    fn parent_array_input() {
        let g = Forest::parse("[0,1,1,0]").unwrap();
        assert_eq!(g.render(), "(()())()");
        // vertex 1's parent is listed after it; re-indexed into preorder
        let h = Forest::parse("[2,0]").unwrap();
        assert_eq!(h.render(), "(())");
        assert_eq!(Forest::parse("[]").unwrap().len(), 0);
        assert!(Forest::parse("[2,1]").is_err());
        assert!(Forest::parse("[1]").is_err());
        assert!(Forest::parse("[0,x]").is_err());
        assert_eq!(g.to_parent_array(), vec![0, 1, 1, 0]);
    }

    #[test]
    fn forest_enumeration_counts_and_order() {
        assert_eq!(enumerate_forests(0).count(), 1);
        let two: Vec<String> = enumerate_forests(2).map(|f| f.render()).collect();
        assert_eq!(two, vec!["(())", "()()"]);
        assert_eq!(enumerate_forests(4).count(), 14);
        let three: Vec<String> = enumerate_forests(3).map(|f| f.render()).collect();
        let mut sorted = three.clone();
        sorted.sort();
        assert_eq!(three, sorted);
    }

    #[test]
    fn labeling_counts() {
        let single = f("()");
        let all: Vec<Vec<i32>> = enumerate_labelings(&single, SignMode::Signed).map(|l| l.into_vec()).collect();
        assert_eq!(all, vec![vec![-1], vec![1]]);
        let chain = f("(())");
        assert_eq!(enumerate_labelings(&chain, SignMode::Signed).count(), 8);
        let even: Vec<_> = enumerate_labelings(&chain, SignMode::EvenSigned).collect();
        assert_eq!(even.len(), 4);
        assert!(even.iter().all(|l| l.iter().filter(|&&x| x < 0).count() % 2 == 0));
        assert_eq!(enumerate_labelings(&Forest::empty(), SignMode::EvenSigned).count(), 1);
    }

    #[test]
    fn labelings_are_lexicographic() {
        let words: Vec<Vec<i32>> = signed_words(3, SignMode::Signed).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
        assert_eq!(words.len(), 48);
    }

    #[test]
    fn labeling_validation() {
        assert!(SignedLabeling::parse("-1,2").is_ok());
        assert!(SignedLabeling::parse("1,1").is_err());
        assert!(SignedLabeling::parse("0,1").is_err());
        assert!(SignedLabeling::parse("3,1").is_err());
        assert!(SignedLabeling::parse("a").is_err());
        let chain = f("(())");
        assert_eq!(
            SignedLabeling::for_forest(&chain, vec![-1, 2], SignMode::EvenSigned),
            Err(Error::OddSignCount)
        );
        assert!(SignedLabeling::for_forest(&chain, vec![1], SignMode::Signed).is_err());
    }

    #[test]
    fn extensions() {
        assert_eq!(linear_extensions(&f("(())"), &[2, -1]), vec![vec![-1, 2]]);
        assert_eq!(
            linear_extensions(&f("(()())"), &[1, 2, 3]),
            vec![vec![2, 3, 1], vec![3, 2, 1]]
        );
        assert_eq!(
            linear_extensions(&f("()()"), &[2, -1]),
            vec![vec![-1, 2], vec![2, -1]]
        );
        assert_eq!(linear_extensions(&Forest::empty(), &[]), vec![Vec::<i32>::new()]);
    }

    #[test]
    fn decreasing() {
        assert_eq!(&*decreasing_labeling(&f("()")), &[1]);
        assert_eq!(&*decreasing_labeling(&f("(())")), &[2, 1]);
        assert_eq!(&*decreasing_labeling(&f("(()())")), &[3, 1, 2]);
    }

    #[test]
    fn without_root_shifts_indices() {
        let g = f("((())())");
        assert_eq!(g.without_root().unwrap().render(), "(())()");
        assert!(f("()()").without_root().is_none());
    }
}
