//! Text format for height sequences and ℕ₊ sequences.
//!
//! ```text
//! {default:<val>, <prime>:<val>, ...}
//! ```
//!
//! `<val>` is a decimal natural number, `inf` (heights only) or `*`
//! (Postnikov descriptors only). Primes must be strictly increasing.
//! Whitespace around tokens is ignored; printing is canonical:
//! `{default:0, 2:3, 5:inf}`.

use std::fmt::Write;

use crate::arith::{is_prime, Prime};
use crate::error::{Error, Result};
use crate::genus::{NPlus, NPlusSequence, PostnikovGenusDescriptor};
use crate::rankone::{Height, HeightSequence, TypeClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    Nat(u32),
    Inf,
    Star,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return Err(Error::parse(start, "expected a number"));
        }
        self.pos += len;
        let n = self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))?;
        Ok((start, n))
    }

    fn value(&mut self) -> Result<(usize, Value)> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("inf") {
            return Ok((start, Value::Inf));
        }
        if self.eat("*") {
            return Ok((start, Value::Star));
        }
        let (_, n) = self.number()?;
        let n = u32::try_from(n).map_err(|_| Error::parse(start, "value out of range"))?;
        Ok((start, Value::Nat(n)))
    }
}

type Entries = (Value, Vec<(Prime, Value)>);

fn parse_entries(text: &str, forbidden: Value, context: &str) -> Result<Entries> {
    let mut cur = Cursor { src: text, pos: 0 };
    let check = |(pos, v): (usize, Value)| {
        if v == forbidden {
            Err(Error::parse(pos, format!("`{}` is not allowed in {context}", if v == Value::Inf { "inf" } else { "*" })))
        } else {
            Ok(v)
        }
    };
    cur.expect("{")?;
    cur.expect("default")?;
    cur.expect(":")?;
    let default = check(cur.value()?)?;
    let mut exceptions: Vec<(Prime, Value)> = Vec::new();
    while cur.eat(",") {
        let (pos, key) = cur.number()?;
        if !is_prime(key) {
            return Err(Error::parse(pos, format!("{key} is not prime")));
        }
        let p = Prime::new(key)?;
        if let Some(&(last, _)) = exceptions.last() {
            if p == last {
                return Err(Error::parse(pos, format!("duplicate prime {key}")));
            }
            if p < last {
                return Err(Error::parse(pos, "primes must be strictly increasing"));
            }
        }
        cur.expect(":")?;
        exceptions.push((p, check(cur.value()?)?));
    }
    cur.expect("}")?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(Error::parse(cur.pos, "trailing input"));
    }
    Ok((default, exceptions))
}

fn to_height(v: Value) -> Height {
    match v {
        Value::Nat(k) => Height::Finite(k),
        Value::Inf => Height::Infinity,
        Value::Star => unreachable!("rejected while parsing"),
    }
}

fn to_nplus(v: Value) -> NPlus {
    match v {
        Value::Nat(k) => NPlus::Nat(k),
        Value::Star => NPlus::Star,
        Value::Inf => unreachable!("rejected while parsing"),
    }
}

pub fn parse_heights(text: &str) -> Result<HeightSequence> {
    let (default, exceptions) = parse_entries(text, Value::Star, "height sequences")?;
    Ok(HeightSequence::new(
        to_height(default),
        exceptions.into_iter().map(|(p, v)| (p, to_height(v))),
    ))
}

pub fn parse_nplus_sequence(text: &str) -> Result<NPlusSequence> {
    let (default, exceptions) = parse_entries(text, Value::Inf, "Postnikov descriptors")?;
    Ok(NPlusSequence::new(
        to_nplus(default),
        exceptions.into_iter().map(|(p, v)| (p, to_nplus(v))),
    ))
}

pub fn parse_descriptor(text: &str, dimension: u32) -> Result<PostnikovGenusDescriptor> {
    PostnikovGenusDescriptor::new(dimension, parse_nplus_sequence(text)?)
}

fn print_entries<V: std::fmt::Display>(
    default: V,
    exceptions: impl Iterator<Item = (Prime, V)>,
) -> String {
    let mut out = format!("{{default:{default}");
    for (p, v) in exceptions {
        write!(out, ", {p}:{v}").unwrap();
    }
    out.push('}');
    out
}

pub fn print_heights(s: &HeightSequence) -> String {
    print_entries(
        s.default_height(),
        s.exceptions().iter().map(|(&p, &h)| (p, h)),
    )
}

pub fn print_nplus_sequence(s: &NPlusSequence) -> String {
    print_entries(
        s.default_value(),
        s.exceptions().iter().map(|(&p, &v)| (p, v)),
    )
}

pub fn print_descriptor(k: &PostnikovGenusDescriptor) -> String {
    print_nplus_sequence(k.entries())
}

/// A type printed as its canonical representative sequence.
pub fn print_type(t: &TypeClass) -> String {
    print_heights(&t.representative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn heights_example() {
        let s = parse_heights("{default:0, 2:3}").unwrap();
        assert_eq!(s, HeightSequence::new(Height::ZERO, [(p(2), Height::Finite(3))]));
        assert_eq!(print_heights(&s), "{default:0, 2:3}");
        let s = parse_heights(" { default : inf ,3: 0 , 7:2 } ").unwrap();
        assert_eq!(print_heights(&s), "{default:inf, 3:0, 7:2}");
    }

    #[test]
    fn descriptor_example() {
        let k = parse_nplus_sequence("{default:*, 2:4}").unwrap();
        assert_eq!(k, NPlusSequence::new(NPlus::Star, [(p(2), NPlus::Nat(4))]));
        assert_eq!(print_nplus_sequence(&k), "{default:*, 2:4}");
        assert!(parse_descriptor("{default:*, 2:4}", 4).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_heights("{default:0, 4:1}"),
            Err(Error::parse(12, "4 is not prime"))
        );
        assert_eq!(
            parse_heights("{default:0, 2:*}"),
            Err(Error::parse(14, "`*` is not allowed in height sequences"))
        );
        assert_eq!(
            parse_nplus_sequence("{default:inf}"),
            Err(Error::parse(9, "`inf` is not allowed in Postnikov descriptors"))
        );
        assert_eq!(
            parse_heights("{default:0, 3:1, 3:2}"),
            Err(Error::parse(17, "duplicate prime 3"))
        );
        assert_eq!(
            parse_heights("{default:0, 5:1, 3:2}"),
            Err(Error::parse(17, "primes must be strictly increasing"))
        );
        assert!(parse_heights("{default:0").is_err());
        assert!(parse_heights("{default:0} x").is_err());
        assert!(parse_heights("{2:1}").is_err());
        assert!(parse_heights("{default:99999999999}").is_err());
        assert!(parse_heights("").is_err());
    }

    #[test]
    fn redundant_entries_are_dropped() {
        let s = parse_heights("{default:1, 2:1, 3:0}").unwrap();
        assert_eq!(print_heights(&s), "{default:1, 3:0}");
    }

    #[test]
    fn types_print_as_representatives() {
        let t = crate::rankone::type_of(&parse_heights("{default:inf, 2:4, 3:1}").unwrap());
        assert_eq!(print_type(&t), "{default:inf, 2:0, 3:0}");
        let t = crate::rankone::type_of(&parse_heights("{default:0, 2:inf, 5:7}").unwrap());
        assert_eq!(print_type(&t), "{default:0, 2:inf}");
    }
}
