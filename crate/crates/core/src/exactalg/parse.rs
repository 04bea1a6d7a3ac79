//! Recursive-descent reader for the textual coefficient form.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' uint)?`,
//! `atom := integer | 'mu1' | 'mu2' | '(' expr ')'`.
//! This accepts everything the printers emit: `p/q`, `c*mu1^a*mu2^b` sums and
//! `(num)/(den)` fractions.

use super::{AlgError, Scalar};

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> AlgError {
        AlgError::Parse(format!(
            "{what} at byte {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn expr(&mut self) -> Result<Scalar, AlgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, AlgError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, AlgError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, AlgError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<num_bigint::BigInt, AlgError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar, AlgError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Scalar::Specialized(super::Rational::from_integer(n)))
            }
            Some(b'm') => {
                let rest = &self.src[self.pos..];
                if rest.starts_with(b"mu1") {
                    self.pos += 3;
                    Ok(Scalar::mu1())
                } else if rest.starts_with(b"mu2") {
                    self.pos += 3;
                    Ok(Scalar::mu2())
                } else {
                    Err(self.err("unknown symbol"))
                }
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar, AlgError> {
    let mut r = Reader {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = r.expr()?;
    if r.peek().is_some() {
        return Err(r.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_rationals_and_fractions() {
        assert_eq!(parse_scalar("3/8").unwrap(), Scalar::ratio(3, 8));
        assert_eq!(parse_scalar("-7").unwrap(), Scalar::int(-7));
        let f = parse_scalar("(mu1 - 1)/(mu1 + mu2)").unwrap();
        let g = &(&Scalar::mu1() - &Scalar::one()) / &(&Scalar::mu1() + &Scalar::mu2());
        assert_eq!(f, g);
        assert_eq!(parse_scalar("2*mu1^2*mu2").unwrap(), Scalar::int(2) * Scalar::mu1().pow(2) * Scalar::mu2());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("mu3").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(1").is_err());
        assert!(parse_scalar("1 2").is_err());
    }
}
