use crate::error::{Error, Result};

/// A finite algebra given by addition and multiplication tables over `0..q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    neg: Vec<usize>,
    /// `left_div[a][c]` solves `a x = c`.
    left_div: Vec<Vec<usize>>,
    /// `right_div[b][c]` solves `x b = c`.
    right_div: Vec<Vec<usize>>,
    pub right_unit: Option<usize>,
    pub left_unit: Option<usize>,
    /// Optional literal for each element, used for parsing and printing.
    pub labels: Option<Vec<String>>,
}

fn check_square(name: &str, t: &[Vec<usize>], q: usize) -> Result<()> {
    if t.len() != q {
        return Err(Error::AxiomViolation(format!(
            "{name} table has {} rows, expected {q}",
            t.len()
        )));
    }
    for (r, row) in t.iter().enumerate() {
        if row.len() != q {
            return Err(Error::AxiomViolation(format!(
                "{name} table row {r} has {} entries, expected {q}",
                row.len()
            )));
        }
        if let Some(v) = row.iter().find(|v| **v >= q) {
            return Err(Error::AxiomViolation(format!(
                "{name} table row {r} contains out-of-range entry {v}"
            )));
        }
    }
    Ok(())
}

impl CayleyTable {
    /// Validates the abelian-group law of `add` and the quasigroup law of `mul` on nonzero elements.
    pub fn new(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let q = add.len();
        if q < 2 {
            return Err(Error::AxiomViolation("table algebra needs at least 2 elements".into()));
        }
        check_square("addition", &add, q)?;
        check_square("multiplication", &mul, q)?;
        if let Some(l) = &labels {
            if l.len() != q {
                return Err(Error::InvalidParameter(format!(
                    "{} labels supplied for {q} elements",
                    l.len()
                )));
            }
        }

        let zero = (0..q)
            .find(|&e| (0..q).all(|x| add[e][x] == x))
            .ok_or_else(|| Error::AxiomViolation("addition table has no identity".into()))?;
        for a in 0..q {
            for b in 0..q {
                if add[a][b] != add[b][a] {
                    return Err(Error::AxiomViolation(format!(
                        "addition not commutative at ({a}, {b})"
                    )));
                }
                for c in 0..q {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(Error::AxiomViolation(format!(
                            "addition not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut neg = vec![0; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a][b] == zero).ok_or_else(|| {
                Error::AxiomViolation(format!("addition row {a} has no inverse"))
            })?;
        }

        for a in 0..q {
            if mul[zero][a] != zero || mul[a][zero] != zero {
                return Err(Error::AxiomViolation(format!(
                    "multiplication by zero is not zero at element {a}"
                )));
            }
        }
        let nonzero: Vec<usize> = (0..q).filter(|&x| x != zero).collect();
        let mut left_div = vec![vec![zero; q]; q];
        let mut right_div = vec![vec![zero; q]; q];
        for &a in &nonzero {
            let mut seen_row = vec![false; q];
            let mut seen_col = vec![false; q];
            for &x in &nonzero {
                let r = mul[a][x];
                if r == zero || seen_row[r] {
                    return Err(Error::AxiomViolation(format!(
                        "multiplication row {a} is not a permutation of the nonzero elements"
                    )));
                }
                seen_row[r] = true;
                left_div[a][r] = x;
                let c = mul[x][a];
                if c == zero || seen_col[c] {
                    return Err(Error::AxiomViolation(format!(
                        "multiplication column {a} is not a permutation of the nonzero elements"
                    )));
                }
                seen_col[c] = true;
                right_div[a][c] = x;
            }
        }

        let right_unit = nonzero
            .iter()
            .copied()
            .find(|&e| (0..q).all(|x| mul[x][e] == x));
        let left_unit = nonzero
            .iter()
            .copied()
            .find(|&e| (0..q).all(|x| mul[e][x] == x));

        Ok(CayleyTable {
            add,
            mul,
            zero,
            neg,
            left_div,
            right_div,
            right_unit,
            left_unit,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn solve_left(&self, a: usize, c: usize) -> usize {
        self.left_div[a][c]
    }

    pub fn solve_right(&self, b: usize, c: usize) -> usize {
        self.right_div[b][c]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn parse(&self, s: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == s) {
                return Some(i);
            }
        }
        s.parse::<usize>().ok().filter(|i| *i < self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let mul = (0..3).map(|a| (0..3).map(|b| (a * b) % 3).collect()).collect();
        (add, mul)
    }

    #[test]
    fn accepts_f3() {
        let (add, mul) = z3();
        let t = CayleyTable::new(add, mul, None).unwrap();
        assert_eq!(t.zero, 0);
        assert_eq!(t.right_unit, Some(1));
        assert_eq!(t.solve_left(2, 1), 2);
        assert_eq!(t.neg(1), 2);
    }

    #[test]
    fn non_permutation_row_is_named() {
        let (add, mut mul) = z3();
        mul[2] = vec![0, 2, 2];
        let err = CayleyTable::new(add, mul, None).unwrap_err();
        assert!(err.to_string().contains("row 2"), "{err}");
    }

    #[test]
    fn noncommutative_addition_rejected() {
        let (mut add, mul) = z3();
        add[1][2] = 1;
        assert!(CayleyTable::new(add, mul, None).is_err());
    }
}
