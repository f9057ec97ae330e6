use num_rational::Ratio;

/// An exactly evaluated genus formula and any anomaly it shows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusValue {
    pub value: Ratio<i128>,
    pub anomaly: Option<String>,
}

impl GenusValue {
    fn new(value: Ratio<i128>) -> Self {
        let mut notes = Vec::new();
        if !value.is_integer() {
            notes.push("non-integral");
        }
        if value <= Ratio::from_integer(0) {
            notes.push("non-positive");
        }
        let anomaly = (!notes.is_empty()).then(|| notes.join(", "));
        GenusValue { value, anomaly }
    }

    pub fn is_valid(&self) -> bool {
        self.anomaly.is_none()
    }

    /// `a` or `a/b`.
    pub fn to_exact_string(&self) -> String {
        self.value.to_string()
    }

    pub fn to_f64(&self) -> f64 {
        *self.value.numer() as f64 / *self.value.denom() as f64
    }
}

fn qpow(q: i128, e: i64) -> Ratio<i128> {
    Ratio::from_integer(q).pow(e as i32)
}

/// `(q^{n+2} + q^{n+1} - (q+1)(2 + q + q^{2+floor(n/2)} + q^{floor((n-1)/2)})) / (q^2 - 1)`,
/// evaluated exactly for any `n`, with anomalies flagged.
pub fn genus_e(n: u32, q: u64) -> GenusValue {
    let (n, q) = (n as i64, q as i128);
    let bracket =
        Ratio::from_integer(2 + q) + qpow(q, 2 + n.div_euclid(2)) + qpow(q, (n - 1).div_euclid(2));
    let top = qpow(q, n + 2) + qpow(q, n + 1) - Ratio::from_integer(q + 1) * bracket;
    GenusValue::new(top / Ratio::from_integer(q * q - 1))
}

/// `(q^{(n+1)/2} - 1)^2` for odd `n`, `(q^{(n+2)/2} - 1)(q^{n/2} - 1)` for even `n`.
pub fn genus_f(n: u32, q: u64) -> i128 {
    let q = q as i128;
    if n % 2 == 1 {
        (q.pow(n.div_ceil(2)) - 1).pow(2)
    } else {
        (q.pow((n + 2) / 2) - 1) * (q.pow(n / 2) - 1)
    }
}

/// `(g(F_n) - 1) / q^n <= q`, exactly.
pub fn genus_bound_holds(n: u32, q: u64) -> bool {
    let lhs = Ratio::new(genus_f(n, q) - 1, (q as i128).pow(n));
    lhs <= Ratio::from_integer(q as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_values() {
        assert_eq!(genus_e(3, 2).value, Ratio::from_integer(2));
        assert_eq!(genus_e(5, 2).value, Ratio::from_integer(40));
        assert_eq!(genus_e(10, 2).value, Ratio::from_integer(1900));
        let low = genus_e(2, 2);
        assert_eq!(low.value, Ratio::from_integer(-5));
        assert_eq!(low.anomaly.as_deref(), Some("non-positive"));
        assert!(genus_e(0, 2).anomaly.unwrap().contains("non-integral"));
    }

    #[test]
    fn f_values() {
        assert_eq!(genus_f(3, 2), 9);
        assert_eq!(genus_f(4, 2), 21);
        assert_eq!(genus_f(1, 3), 4);
        assert_eq!(genus_f(9, 2), 961);
        assert_eq!(genus_f(10, 2), 1953);
        assert_eq!(genus_f(10, 3), 176176);
    }

    #[test]
    fn genus_bound_small() {
        for q in 2..=5 {
            for n in 0..=20 {
                assert!(genus_bound_holds(n, q), "q={q} n={n}");
            }
        }
    }
}
