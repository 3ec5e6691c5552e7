use std::fmt;

use num_traits::{One, Signed};

use crate::poly::Polynomial;

/// Canonical text: leading term first, `*` between factors, `^` for
/// exponents above one, rational coefficients as `num/den`.
pub fn render(p: &Polynomial) -> String {
    p.to_string()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = self.ring().variables();
        for (i, (m, c)) in self.terms().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            let mut first = true;
            if m.is_one() || !a.is_one() {
                write!(f, "{a}")?;
                first = false;
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&vars[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
