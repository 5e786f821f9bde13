//! Text rendering shared by every element type.
//!
//! Terms are written in ascending basis order as `k(basis)`, unit
//! coefficients are elided and signs are spelled out between terms:
//! `- (2,1,3) - 2(2,3,1) + (1,2,3)`. The zero element renders as `0`.

use std::fmt::{self, Display, Write};

pub(crate) fn write_combination<'a, B, I>(f: &mut impl Write, terms: I) -> fmt::Result
where
    B: Display + 'a,
    I: IntoIterator<Item = (&'a B, i64)>,
{
    let mut first = true;
    for (basis, c) in terms {
        let mag = c.unsigned_abs();
        match (first, c < 0) {
            (true, false) => {}
            (true, true) => f.write_str("- ")?,
            (false, false) => f.write_str(" + ")?,
            (false, true) => f.write_str(" - ")?,
        }
        if mag != 1 {
            write!(f, "{mag}")?;
        }
        write!(f, "{basis}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
