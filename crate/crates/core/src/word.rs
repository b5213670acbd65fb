//! Words in the generators `a, b, c, …`.
//!
//! Letters are stored as nonzero integers: `k` for the `k`-th generator and
//! `-k` for its inverse. The text syntax accepts uppercase letters for
//! inverses, `^n` or superscript exponents (negative allowed), `⁻¹`, and
//! parenthesised subwords, so `b²ac²a`, `(b^2 a)^2` and `a c^-3 B` all parse.
//! No free reduction is applied.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("letter {letter:?} is outside the alphabet of {ngens} generators")]
    Alphabet { letter: char, ngens: usize },
    #[error("unexpected {0:?} in word")]
    Unexpected(char),
    #[error("unbalanced parentheses")]
    Parens,
    #[error("missing exponent after '^'")]
    Exponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        Word(base.0.repeat(n.unsigned_abs() as usize))
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    /// Highest generator index used.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn parse(s: &str, ngens: usize) -> Result<Word, WordError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && !matches!(c, '*' | '·')).collect();
        let mut pos = 0;
        let w = parse_seq(&chars, &mut pos, ngens)?;
        if pos != chars.len() {
            return Err(if chars[pos] == ')' { WordError::Parens } else { WordError::Unexpected(chars[pos]) });
        }
        Ok(w)
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|i| i as u32)
}

fn parse_seq(chars: &[char], pos: &mut usize, ngens: usize) -> Result<Word, WordError> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let atom = if c == '(' {
            *pos += 1;
            let inner = parse_seq(chars, pos, ngens)?;
            if chars.get(*pos) != Some(&')') {
                return Err(WordError::Parens);
            }
            *pos += 1;
            inner
        } else if c == ')' {
            break;
        } else if c == '1' && out.is_empty() && chars.len() == 1 {
            *pos += 1;
            Word::identity()
        } else if c.is_ascii_alphabetic() {
            let k = (c.to_ascii_lowercase() as u8 - b'a') as usize + 1;
            if k > ngens {
                return Err(WordError::Alphabet { letter: c, ngens });
            }
            *pos += 1;
            let x = k as i32;
            Word(vec![if c.is_ascii_uppercase() { -x } else { x }])
        } else {
            return Err(WordError::Unexpected(c));
        };
        let e = parse_exponent(chars, pos)?;
        out.extend(atom.pow(e).0);
    }
    Ok(Word(out))
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64, WordError> {
    let mut sign = 1;
    let mut digits = String::new();
    if chars.get(*pos) == Some(&'^') {
        *pos += 1;
        if chars.get(*pos) == Some(&'-') {
            sign = -1;
            *pos += 1;
        }
        while let Some(c) = chars.get(*pos).filter(|c| c.is_ascii_digit()) {
            digits.push(*c);
            *pos += 1;
        }
        if digits.is_empty() {
            return Err(WordError::Exponent);
        }
    } else {
        if chars.get(*pos) == Some(&'⁻') {
            sign = -1;
            *pos += 1;
        }
        while let Some(d) = chars.get(*pos).and_then(|c| superscript_digit(*c)) {
            digits.push(char::from_digit(d, 10).expect("digit"));
            *pos += 1;
        }
        if digits.is_empty() {
            return if sign < 0 { Err(WordError::Exponent) } else { Ok(1) };
        }
    }
    Ok(sign * digits.parse::<i64>().map_err(|_| WordError::Exponent)?)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == x {
                run += 1;
            }
            let letter = (b'a' + (x.unsigned_abs() - 1) as u8) as char;
            match (x < 0, run) {
                (false, 1) => write!(f, "{letter}")?,
                (false, n) => write!(f, "{letter}^{n}")?,
                (true, 1) => write!(f, "{letter}^-1")?,
                (true, n) => write!(f, "{letter}^-{n}")?,
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s, 26)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<i32> {
        Word::parse(s, 3).unwrap().0
    }

    #[test]
    fn syntax() {
        assert_eq!(w("b²ac²a"), vec![2, 2, 1, 3, 3, 1]);
        assert_eq!(w("b^2 a c^2 a"), w("b²ac²a"));
        assert_eq!(w("(b²a)²"), vec![2, 2, 1, 2, 2, 1]);
        assert_eq!(w("ac⁴ac²"), vec![1, 3, 3, 3, 3, 1, 3, 3]);
        assert_eq!(w("aB"), vec![1, -2]);
        assert_eq!(w("(ab)^-1"), vec![-2, -1]);
        assert_eq!(w("c⁻¹"), vec![-3]);
        assert_eq!(w(""), Vec::<i32>::new());
        assert_eq!(w("1"), Vec::<i32>::new());
    }

    #[test]
    fn errors() {
        assert_eq!(Word::parse("ad", 3), Err(WordError::Alphabet { letter: 'd', ngens: 3 }));
        assert_eq!(Word::parse("(ab", 3), Err(WordError::Parens));
        assert_eq!(Word::parse("ab)", 3), Err(WordError::Parens));
        assert_eq!(Word::parse("a^", 3), Err(WordError::Exponent));
        assert_eq!(Word::parse("a+b", 3), Err(WordError::Unexpected('+')));
    }

    #[test]
    fn display_and_reduction() {
        assert_eq!(Word::parse("b²ac²a", 3).unwrap().to_string(), "b^2ac^2a");
        assert_eq!(Word(vec![1, 2, -2, -1, 3]).freely_reduced(), Word(vec![3]));
        assert_eq!(Word(vec![1, -2]).inverse(), Word(vec![2, -1]));
    }
}
