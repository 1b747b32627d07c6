//! Permutations in one-line notation, their descent-type statistics, words
//! and the word-to-permutation map, and lexicographic enumeration with
//! rank/unrank.
//!
//! Positions and symbols are 1-based throughout, so the statistics read off
//! the formulas directly: a descent is a position `i < n` with
//! `p(i) > p(i+1)`, and the cyclic descent statistic adds the wraparound
//! comparison `p(n) > p(1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of `{1..n}` in one-line notation: `images[i]` is the image
/// of position `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

/// `n!` in `u64`; panics past `n = 20` where it would overflow.
pub fn factorial_u64(n: u32) -> u64 {
    assert!(n <= 20, "factorial_u64 overflows past 20");
    (2..=n as u64).product()
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        assert!(n >= 1);
        Permutation { images: (1..=n).collect() }
    }

    /// Builds from one-line notation, checking that the images are a
    /// bijection of `{1..n}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::domain("permutation must have length >= 1"));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v as usize > n {
                return Err(Error::domain(format!("symbol {v} out of range 1..={n}")));
            }
            if seen[v as usize - 1] {
                return Err(Error::domain(format!("symbol {v} repeated")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The rotation `zeta^j` where `zeta` maps `i` to `i + 1 (mod n)`.
    /// `j = n` (or 0) gives the identity.
    pub fn rotation(n: u32, j: u32) -> Self {
        assert!(n >= 1);
        let images = (0..n).map(|i| (i + j) % n + 1).collect();
        Permutation { images }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of the 1-based position `i`.
    pub fn image(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Number of positions `i < n` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> u32 {
        self.images.windows(2).filter(|w| w[0] > w[1]).count() as u32
    }

    /// Descents plus the wraparound descent at position `n` when
    /// `p(n) > p(1)`. Undefined (panics) for `n = 1`: every convention for a
    /// single card is arbitrary, so none is invented.
    pub fn cyclic_descents(&self) -> u32 {
        assert!(self.n() >= 2, "cyclic descents are undefined for n = 1");
        let wrap = (self.images[self.images.len() - 1] > self.images[0]) as u32;
        self.descents() + wrap
    }

    /// Sum of the descent positions.
    pub fn major_index(&self) -> u32 {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u32 + 1)
            .sum()
    }

    /// Length of the longest strictly increasing subsequence, by patience
    /// sorting: one pass, binary searching the pile tops.
    pub fn lis(&self) -> u32 {
        let mut tops: Vec<u32> = Vec::new();
        for &x in &self.images {
            let idx = tops.partition_point(|&t| t < x);
            if idx == tops.len() {
                tops.push(x);
            } else {
                tops[idx] = x;
            }
        }
        tops.len() as u32
    }

    /// Function composition: `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        let images = other.images.iter().map(|&v| self.images[(v - 1) as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = (self.images[i] - 1) as usize;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> u64 {
        let n = self.images.len();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank += smaller as u64 * factorial_u64((n - 1 - i) as u32);
        }
        rank
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(n: u32, rank: u64) -> Permutation {
        assert!(rank < factorial_u64(n), "rank out of range");
        let mut remaining: Vec<u32> = (1..=n).collect();
        let mut images = Vec::with_capacity(n as usize);
        let mut r = rank;
        for i in (0..n).rev() {
            let f = factorial_u64(i);
            let idx = (r / f) as usize;
            r %= f;
            images.push(remaining.remove(idx));
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let images = s
            .split_whitespace()
            .map(|tok| tok.parse::<u32>().map_err(|_| Error::domain(format!("bad symbol {tok:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_images(images)
    }
}

/// A length-`n` word over the alphabet `{1..k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self, Error> {
        if alphabet < 1 {
            return Err(Error::domain("alphabet size must be >= 1"));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l < 1 || l > alphabet) {
            return Err(Error::domain(format!("letter {bad} outside 1..={alphabet}")));
        }
        Ok(Word { letters, alphabet })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// The shuffle a word encodes: split `1..n` into consecutive stacks
    /// sized by the letter multiplicities (letter 1 first), then deal stack
    /// `i` left to right into the positions holding letter `i`.
    ///
    /// A weakly increasing subsequence of the word becomes a strictly
    /// increasing subsequence of the permutation, which is why the two
    /// longest-subsequence statistics agree.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.letters.len();
        let mut counts = vec![0u32; self.alphabet as usize];
        for &l in &self.letters {
            counts[(l - 1) as usize] += 1;
        }
        // next[i] = next unused symbol of stack i+1
        let mut next = vec![0u32; self.alphabet as usize];
        let mut start = 1u32;
        for (i, &c) in counts.iter().enumerate() {
            next[i] = start;
            start += c;
        }
        let mut images = Vec::with_capacity(n);
        for &l in &self.letters {
            let i = (l - 1) as usize;
            images.push(next[i]);
            next[i] += 1;
        }
        Permutation { images }
    }

    /// Length of the longest weakly increasing subsequence of the letters.
    pub fn longest_weakly_increasing(&self) -> u32 {
        let mut tops: Vec<u32> = Vec::new();
        for &x in &self.letters {
            let idx = tops.partition_point(|&t| t <= x);
            if idx == tops.len() {
                tops.push(x);
            } else {
                tops[idx] = x;
            }
        }
        tops.len() as u32
    }
}

/// Iterator over all of `S_n` in lexicographic order.
pub struct Permutations {
    next: Option<Vec<u32>>,
    remaining: u64,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut succ = current.clone();
            next_lex(&mut succ);
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Advances to the lexicographic successor in place.
fn next_lex(a: &mut [u32]) {
    let n = a.len();
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse(); // wrap to identity
        return;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
}

/// All `n!` permutations in lexicographic order. Enumeration above `limit`
/// is refused so brute-force suites stay explicit about scale.
pub fn permutations(n: u32, limit: u32) -> Result<Permutations, Error> {
    permutations_range(n, 0, u64::MAX, limit)
}

/// The permutations with rank in `lo..hi` (clamped to `n!`), so workers can
/// process disjoint chunks of the enumeration independently.
pub fn permutations_range(n: u32, lo: u64, hi: u64, limit: u32) -> Result<Permutations, Error> {
    if n > limit {
        return Err(Error::resource(format!(
            "enumeration of S_{n} exceeds the configured limit {limit}; raise --enum-limit if \
             {n}! permutations are really wanted"
        )));
    }
    let total = factorial_u64(n);
    let lo = lo.min(total);
    let hi = hi.min(total);
    if lo >= hi {
        return Ok(Permutations { next: None, remaining: 0 });
    }
    let first = Permutation::unrank(n, lo);
    Ok(Permutations { next: Some(first.images), remaining: hi - lo })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_counts() {
        assert_eq!(Permutation::identity(5).descents(), 0);
        assert_eq!(p("2 1 3").descents(), 1);
        assert_eq!(p("1 7 2 3 8 4 5 9 6").descents(), 3);
    }

    #[test]
    fn cyclic_descent_counts() {
        assert_eq!(Permutation::identity(3).cyclic_descents(), 1);
        assert_eq!(p("2 1 3").cyclic_descents(), 2);
        assert_eq!(p("3 2 1").cyclic_descents(), 2);
        for n in 2..=8u32 {
            for q in permutations(n, 10).unwrap() {
                let d = q.descents();
                let cd = q.cyclic_descents();
                assert!(cd == d || cd == d + 1);
                assert!(cd >= 1 && cd <= n - 1);
            }
        }
    }

    #[test]
    #[should_panic(expected = "undefined for n = 1")]
    fn cyclic_descents_rejects_singleton() {
        Permutation::identity(1).cyclic_descents();
    }

    #[test]
    fn major_index_counts() {
        assert_eq!(Permutation::identity(4).major_index(), 0);
        assert_eq!(p("2 1 3").major_index(), 1);
        assert_eq!(p("3 1 2").major_index(), 1);
        assert_eq!(p("1 3 2").major_index(), 2);
    }

    /// Brute force over all subsequences; usable up to n about 10.
    fn lis_brute(q: &Permutation) -> u32 {
        let v = q.images();
        let n = v.len();
        let mut best = 0u32;
        for mask in 0u32..(1 << n) {
            let picked: Vec<u32> =
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| v[i]).collect();
            if picked.windows(2).all(|w| w[0] < w[1]) {
                best = best.max(picked.len() as u32);
            }
        }
        best
    }

    #[test]
    fn lis_examples() {
        assert_eq!(Permutation::identity(6).lis(), 6);
        assert_eq!(p("5 4 3 2 1").lis(), 1);
        let example = p("1 7 2 3 8 4 5 9 6");
        assert_eq!(lis_brute(&example), 6);
        assert_eq!(example.lis(), 6);
    }

    #[test]
    fn lis_matches_brute_force_exhaustively() {
        for n in 1..=6u32 {
            for q in permutations(n, 10).unwrap() {
                assert_eq!(q.lis(), lis_brute(&q), "{q}");
            }
        }
    }

    #[test]
    fn word_map_worked_example() {
        let w = Word::new(vec![1, 2, 1, 1, 2, 1, 1, 2, 1], 2).unwrap();
        assert_eq!(w.to_permutation(), p("1 7 2 3 8 4 5 9 6"));
        assert_eq!(w.longest_weakly_increasing(), 6);

        let ones = Word::new(vec![1; 7], 1).unwrap();
        assert_eq!(ones.to_permutation(), Permutation::identity(7));
        assert_eq!(ones.longest_weakly_increasing(), 7);

        let w21 = Word::new(vec![2, 1], 2).unwrap();
        assert_eq!(w21.to_permutation(), p("2 1"));

        let dec = Word::new(vec![3, 2, 1], 3).unwrap();
        assert_eq!(dec.longest_weakly_increasing(), 1);
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![1, 4], 3).is_err());
        assert!(Word::new(vec![0], 2).is_err());
        assert!(Word::new(vec![], 0).is_err());
    }

    #[test]
    fn group_operations() {
        let q = p("3 1 4 2");
        assert_eq!(q.compose(&q.inverse()), Permutation::identity(4));
        assert_eq!(q.inverse().compose(&q), Permutation::identity(4));
        assert_eq!(Permutation::rotation(5, 5), Permutation::identity(5));
        assert_eq!(Permutation::rotation(4, 1), p("2 3 4 1"));
        // rotation composes additively
        assert_eq!(
            Permutation::rotation(6, 2).compose(&Permutation::rotation(6, 3)),
            Permutation::rotation(6, 5)
        );
        assert_eq!(p("2 1 3").cycle_type(), vec![2, 1]);
        assert_eq!(p("2 3 1").cycle_type(), vec![3]);
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn composition_order() {
        // (a . b)(i) = a(b(i))
        let a = p("2 1 3");
        let b = p("1 3 2");
        assert_eq!(a.compose(&b), p("2 3 1"));
        assert_eq!(b.compose(&a), p("3 1 2"));
    }

    #[test]
    fn enumeration_order_and_rank() {
        let all: Vec<Permutation> = permutations(3, 10).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], p("1 2 3"));
        assert_eq!(all[5], p("3 2 1"));
        for (i, q) in all.iter().enumerate() {
            assert_eq!(q.rank(), i as u64);
            assert_eq!(&Permutation::unrank(3, i as u64), q);
        }

        let single: Vec<Permutation> = permutations(1, 10).unwrap().collect();
        assert_eq!(single, vec![Permutation::identity(1)]);

        for (r, q) in permutations(5, 10).unwrap().enumerate() {
            assert_eq!(q.rank(), r as u64);
            assert_eq!(Permutation::unrank(5, r as u64), q);
        }
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        match permutations(11, 10) {
            Err(Error::Resource(msg)) => assert!(msg.contains("limit 10")),
            other => panic!("expected resource error, got {other:?}"),
        }
        assert!(permutations(11, 11).is_ok());
    }

    #[test]
    fn range_partition_covers_everything() {
        let whole: Vec<Permutation> = permutations(4, 10).unwrap().collect();
        let mut pieces = Vec::new();
        for chunk in [(0, 7), (7, 16), (16, 24), (24, 99)] {
            pieces.extend(permutations_range(4, chunk.0, chunk.1, 10).unwrap());
        }
        assert_eq!(whole, pieces);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = p("1 7 2 3 8 4 5 9 6");
        assert_eq!(q.to_string(), "1 7 2 3 8 4 5 9 6");
        assert!("1 2 2".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }
}
