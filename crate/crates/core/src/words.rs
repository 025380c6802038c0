//! Words over the alphabet `{e1, e2, f1, f2, -, ~}` indexing the
//! indecomposable first-level modules: one cycle `w0`, one bispecial word
//! `w1`, special words `w2..w5` and usual words `w6..w10`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Q};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WordKind {
    W0,
    W1,
    W2,
    W3,
    W4,
    W5,
    W6,
    W7,
    W8,
    W9,
    W10,
}

impl WordKind {
    pub const ALL: [WordKind; 11] = [
        WordKind::W0,
        WordKind::W1,
        WordKind::W2,
        WordKind::W3,
        WordKind::W4,
        WordKind::W5,
        WordKind::W6,
        WordKind::W7,
        WordKind::W8,
        WordKind::W9,
        WordKind::W10,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<WordKind> {
        WordKind::ALL.get(i).copied()
    }

    /// Transposing these yields the inverse word, an isomorphic representation.
    pub fn is_self_transpose(self) -> bool {
        matches!(
            self,
            WordKind::W0 | WordKind::W1 | WordKind::W6 | WordKind::W9 | WordKind::W10
        )
    }

    pub fn has_size(self) -> bool {
        self != WordKind::W10
    }

    pub fn min_size(self) -> u32 {
        match self {
            WordKind::W0 | WordKind::W1 | WordKind::W6 | WordKind::W9 => 1,
            _ => 0,
        }
    }

    pub fn mark_count(self) -> usize {
        match self {
            WordKind::W1 => 2,
            WordKind::W2 | WordKind::W3 | WordKind::W4 | WordKind::W5 => 1,
            _ => 0,
        }
    }

    /// The letter at the special end of the untransposed word, if any.
    pub fn special_letter(self) -> Option<Letter> {
        match self {
            WordKind::W2 | WordKind::W3 => Some(Letter::E1),
            WordKind::W4 | WordKind::W5 => Some(Letter::F1),
            _ => None,
        }
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}", self.index())
    }
}

impl FromStr for WordKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t
            .strip_prefix(['w', 'W'])
            .unwrap_or(t);
        digits
            .parse::<usize>()
            .ok()
            .and_then(WordKind::from_index)
            .ok_or_else(|| Error::Parse(format!("unknown word kind {s:?} (expected w0..w10)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    E1,
    F1,
}

impl Letter {
    pub fn flipped(self) -> Letter {
        match self {
            Letter::E1 => Letter::F1,
            Letter::F1 => Letter::E1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' | 'p' => Some(Sign::Plus),
            '-' | 'm' => Some(Sign::Minus),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Marks {
    None,
    One(Sign),
    Two(Sign, Sign),
}

impl Marks {
    pub fn arity(self) -> usize {
        match self {
            Marks::None => 0,
            Marks::One(_) => 1,
            Marks::Two(_, _) => 2,
        }
    }

    /// All mark tuples of the given arity, `+` before `-`.
    pub fn all(arity: usize) -> Vec<Marks> {
        use Sign::{Minus, Plus};
        match arity {
            0 => vec![Marks::None],
            1 => vec![Marks::One(Plus), Marks::One(Minus)],
            _ => vec![
                Marks::Two(Plus, Plus),
                Marks::Two(Plus, Minus),
                Marks::Two(Minus, Plus),
                Marks::Two(Minus, Minus),
            ],
        }
    }
}

impl fmt::Display for Marks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marks::None => Ok(()),
            Marks::One(s) => write!(f, "{}", s.symbol()),
            Marks::Two(a, b) => write!(f, "{}{}", a.symbol(), b.symbol()),
        }
    }
}

impl FromStr for Marks {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs: Option<Vec<Sign>> = s.trim().chars().map(Sign::from_char).collect();
        match signs.as_deref() {
            Some([]) => Ok(Marks::None),
            Some([a]) => Ok(Marks::One(*a)),
            Some([a, b]) => Ok(Marks::Two(*a, *b)),
            _ => Err(Error::InvalidMarks(format!("cannot read marks {s:?}"))),
        }
    }
}

/// A validated word: kind, size, transposition, marks and (for `W0`) the
/// eigenvalue. `mu = None` on a `W0` is a placeholder bound from the context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordSpec {
    kind: WordKind,
    n: Option<u32>,
    transposed: bool,
    marks: Marks,
    mu: Option<Q>,
}

pub fn word_new(
    kind: WordKind,
    n: Option<u32>,
    transposed: bool,
    marks: Marks,
    mu: Option<Q>,
) -> Result<WordSpec> {
    match (kind.has_size(), n) {
        (false, Some(n)) => {
            return Err(Error::InvalidSize(format!("{kind} has no size, got n={n}")));
        }
        (true, None) => return Err(Error::InvalidSize(format!("{kind} needs a size n"))),
        (true, Some(n)) if n < kind.min_size() => {
            return Err(Error::InvalidSize(format!(
                "{kind} needs n >= {}, got n={n}",
                kind.min_size()
            )));
        }
        _ => {}
    }
    if marks.arity() != kind.mark_count() {
        return Err(Error::InvalidMarks(format!(
            "{kind} takes {} mark(s), got {}",
            kind.mark_count(),
            marks.arity()
        )));
    }
    if transposed && kind.is_self_transpose() {
        return Err(Error::InvalidTranspose(format!(
            "{kind} coincides with its inverse word; only the untransposed form exists"
        )));
    }
    match (&mu, kind) {
        (Some(m), WordKind::W0) => check_eigenvalue(m)?,
        (Some(_), _) => {
            return Err(Error::InvalidEigenvalue(format!(
                "only the cycle W0 carries an eigenvalue, not {kind}"
            )));
        }
        _ => {}
    }
    Ok(WordSpec {
        kind,
        n,
        transposed,
        marks,
        mu,
    })
}

pub(crate) fn check_eigenvalue(m: &Q) -> Result<()> {
    if m.is_zero() || m.is_one() {
        return Err(Error::InvalidEigenvalue(format!(
            "mu must avoid 0 and 1, got {}",
            format_rational(m)
        )));
    }
    Ok(())
}

impl WordSpec {
    pub fn new(
        kind: WordKind,
        n: Option<u32>,
        transposed: bool,
        marks: Marks,
        mu: Option<Q>,
    ) -> Result<Self> {
        word_new(kind, n, transposed, marks, mu)
    }

    /// Untransposed word with the given size and marks.
    pub fn plain(kind: WordKind, n: u32, marks: Marks) -> Result<Self> {
        let n = kind.has_size().then_some(n);
        word_new(kind, n, false, marks, None)
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn n(&self) -> Option<u32> {
        self.n
    }

    /// Size, with `W10` counted as 0.
    pub fn size(&self) -> u32 {
        self.n.unwrap_or(0)
    }

    pub fn transposed(&self) -> bool {
        self.transposed
    }

    pub fn marks(&self) -> Marks {
        self.marks
    }

    pub fn mu(&self) -> Option<&Q> {
        self.mu.as_ref()
    }

    pub fn with_mu(&self, mu: Option<Q>) -> Result<Self> {
        word_new(self.kind, self.n, self.transposed, self.marks, mu)
    }

    pub fn with_marks(&self, marks: Marks) -> Result<Self> {
        word_new(self.kind, self.n, self.transposed, marks, self.mu.clone())
    }

    pub fn with_n(&self, n: u32) -> Result<Self> {
        word_new(self.kind, Some(n), self.transposed, self.marks, self.mu.clone())
    }

    /// Letter at the special end after transposition, for `W2..W5`.
    pub fn special_end(&self) -> Option<Letter> {
        self.kind
            .special_letter()
            .map(|l| if self.transposed { l.flipped() } else { l })
    }

    /// Short label such as `W2(2)+`, `W4^T(1)-`, `W0(1;mu=3)`, `W10`.
    pub fn label(&self) -> String {
        let mut s = self.kind.to_string();
        if self.transposed {
            s.push_str("^T");
        }
        if let Some(n) = self.n {
            match &self.mu {
                Some(m) => s.push_str(&format!("({n};mu={})", format_rational(m))),
                None => s.push_str(&format!("({n})")),
            }
        }
        s.push_str(&self.marks.to_string());
        s
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

const PERIOD: &str = "e1 ~ e1 - f1 ~ f1";

/// The word in the letters `e1, e2, f1, f2` joined by `-` and `~`.
/// Transposed words exchange `e` and `f`.
pub fn word_string(w: &WordSpec) -> String {
    let n = w.size();
    let power = match n {
        0 => None,
        1 => Some(format!("({PERIOD})")),
        _ => Some(format!("({PERIOD})^{n}")),
    };
    let parts: Vec<String> = match w.kind {
        WordKind::W0 | WordKind::W6 => {
            return swap_letters(if n == 1 { PERIOD.to_string() } else { power.unwrap_or_default() }, w.transposed);
        }
        WordKind::W1 => vec!["e1".into(), "f1".into()],
        WordKind::W2 => chain(None, power, &["e1"]),
        WordKind::W3 => chain(Some("f2"), power, &["e1"]),
        WordKind::W4 => chain(None, power, &["e1 ~ e1", "f1"]),
        WordKind::W5 => chain(Some("f2"), power, &["e1 ~ e1", "f1"]),
        WordKind::W7 => chain(None, power, &["e2"]),
        WordKind::W8 => chain(None, power, &["e1 ~ e1", "f2"]),
        WordKind::W9 => chain(Some("f2"), power, &["e2"]),
        WordKind::W10 => vec!["e2".into(), "f2".into()],
    };
    swap_letters(parts.join(" - "), w.transposed)
}

fn chain(head: Option<&str>, power: Option<String>, tail: &[&str]) -> Vec<String> {
    head.map(str::to_string)
        .into_iter()
        .chain(power)
        .chain(tail.iter().map(|s| s.to_string()))
        .collect()
}

fn swap_letters(s: String, transposed: bool) -> String {
    if !transposed {
        return s;
    }
    s.chars()
        .map(|c| match c {
            'e' => 'f',
            'f' => 'e',
            c => c,
        })
        .collect()
}

/// Letters at the special ends: both ends of `W1`, the last letter of `W2..W5`.
pub fn special_ends(w: &WordSpec) -> Vec<Letter> {
    match w.kind {
        WordKind::W1 => vec![Letter::E1, Letter::F1],
        _ => w.special_end().into_iter().collect(),
    }
}

pub fn word_transpose(w: &WordSpec) -> Result<WordSpec> {
    if w.kind.is_self_transpose() {
        return Err(Error::SelfTranspose(w.kind.to_string()));
    }
    let mut t = w.clone();
    t.transposed = !t.transposed;
    Ok(t)
}

/// Every valid spec with `n <= max_n`, ordered by kind, n, transposition,
/// marks. `W0` entries carry no eigenvalue.
pub fn enumerate_words(max_n: u32) -> Vec<WordSpec> {
    let mut out = Vec::new();
    for kind in WordKind::ALL {
        let sizes: Vec<Option<u32>> = if kind.has_size() {
            (kind.min_size()..=max_n).map(Some).collect()
        } else {
            vec![None]
        };
        for n in sizes {
            for transposed in [false, true] {
                if transposed && kind.is_self_transpose() {
                    continue;
                }
                for marks in Marks::all(kind.mark_count()) {
                    if let Ok(w) = word_new(kind, n, transposed, marks, None) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// JSON shape of a word: `{"family": "w2", "n": 2, "marks": "+", ...}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct WordSpecDoc {
    pub family: String,
    pub n: Option<u32>,
    pub marks: String,
    pub transposed: bool,
    pub mu: Option<String>,
}

impl From<&WordSpec> for WordSpecDoc {
    fn from(w: &WordSpec) -> Self {
        WordSpecDoc {
            family: format!("w{}", w.kind.index()),
            n: w.n,
            marks: w.marks.to_string(),
            transposed: w.transposed,
            mu: w.mu.as_ref().map(format_rational),
        }
    }
}

impl WordSpecDoc {
    pub fn to_spec(&self) -> Result<WordSpec> {
        let mu = self
            .mu
            .as_deref()
            .map(crate::arith::parse_rational)
            .transpose()?;
        word_new(
            self.family.parse()?,
            self.n,
            self.transposed,
            self.marks.parse()?,
            mu,
        )
    }
}
