// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Raw matrix dump: `rows: u64`, `cols: u64`, then row-major `(re, im)`
//! pairs, all little-endian.

use std::io::{self, Read, Write};

use num_complex::Complex64;

use super::realize::CMatrix;

pub fn write_matrix(w: &mut impl Write, m: &CMatrix) -> io::Result<()> {
    w.write_all(&(m.nrows() as u64).to_le_bytes())?;
    w.write_all(&(m.ncols() as u64).to_le_bytes())?;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let z = m[(r, c)];
            w.write_all(&z.re.to_le_bytes())?;
            w.write_all(&z.im.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_matrix(r: &mut impl Read) -> io::Result<CMatrix> {
    let mut word = [0u8; 8];
    let mut next = |r: &mut dyn Read| -> io::Result<[u8; 8]> {
        r.read_exact(&mut word)?;
        Ok(word)
    };
    let rows = u64::from_le_bytes(next(r)?) as usize;
    let cols = u64::from_le_bytes(next(r)?) as usize;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let re = f64::from_le_bytes(next(r)?);
        let im = f64::from_le_bytes(next(r)?);
        data.push(Complex64::new(re, im));
    }
    Ok(CMatrix::from_row_slice(rows, cols, &data))
}
