//! Modular polynomials, parametrizations and factorizations for `q = 2`,
//! stored in the polynomial grammar. `j0`/`j1` placeholders in uniformizer
//! expressions are written as `X`/`Y`.

pub const PHI_T: &str = r"X^3 + Y^3 + T(T+1)^3(X^2 + Y^2) + T^2(T+1)^6(X+Y)
+ T^3(T+1)^9 + X^2Y^2 + (T+1)^3(T^2 + T + 1)XY + T(X^2Y + XY^2)";

pub const PSI_T: &str = r"Z^2 + (X + (Y^2 + TY + T(T+1)^3))Z + X^2 + (Y^2 + TY + T(T+1)^3)X + TY^2
+ (T^2 + T + 1)(T+1)^3Y + T^2(T+1)^6";

pub const U0_T: &str = r"T^3(T^2X + T^2 + T^4 + T^6 + 1 + TY + T^2Y + TX + XY)
/ (T^3 + Y^2 + T^2 + X + TY + T^3X + T^7 + T^4Y + T^6)";

pub const J0_T: &str = "(u + T)^3/u";
pub const J1_T: &str = "(u + T^2)^3/u^2";

pub const EXPANDED_T: &str = "(X + T^2)^3 Y + (Y + T)^3 X^2";
pub const FACTORS_T: [&str; 2] = ["XY + T^3", "X^2 + XY^2 + XYT + YT^3"];

pub const PHI_T2T1: &str = r"X^5 + Y^5 + X^4 Y^4 + (T^2 + T + 1)(X^4 Y^2 + X^2 Y^4)
+ (T^2 + T + 1)(X^4 Y + X Y^4) + T^3(T + 1)^3(T^2 + T + 1)(X^4 + Y^4)
+ T^2(T + 1)^2(T^2 + T + 1)X^3 Y^3
+ T(T + 1)(T^2 + T + 1)(T^3 + T + 1)(T^3 + T^2 + 1)(X^3 Y^2 + X^2 Y^3)
+ T^3(T + 1)^3(T^2 + T + 1)(X^3 Y + X Y^3) + T^6(T + 1)^6(T^2 + T + 1)^2(X^3 + Y^3)
+ T^5(T + 1)^5(T^2 + T + 1)(T^4 + T + 1)X^2 Y^2
+ T^6(T + 1)^6(T^2 + T + 1)(T^4 + T + 1)(X^2 Y + X Y^2)
+ T^9(T + 1)^9(T^2 + T + 1)^3(X^2 + Y^2) + T^11(T + 1)^11XY";

pub const J0_T2T1: &str = "(u + 1)^3(u^2 + u + T^2 + T + 1)/u";
pub const J1_T2T1: &str = "(u + T^2 + T + 1)^3(u^2 + u + T^2 + T + 1)/u^4";

pub const EXPANDED_T2T1: &str = r"(Y^5 + (T^2 + T + 1)Y^3 + (T^2 + T + 1)Y^2 + (T^2 + T)Y + (T^2 + T + 1))X^4
+ Y(X^5 + (T^2 + T)X^4 + (T^2 + T + 1)^2 X^3 + (T^2 + T + 1)^3 X^2 + (T^2 + T + 1)^4)";

pub const FACTORS_T2T1: [&str; 2] = [
    "XY + T^2 + T + 1",
    r"Y^4 X^3 + (T^2 + T + 1)(Y^3 X^2 + Y^2 X^3 + (T^2 + T + 1)Y^2 X + Y X^3)
+ (T^2 + T + 1)Y X^2 + (T^2 + T + 1)^2 Y + X^4",
];

pub const REDUCED_T2T1: &str = "Y^4 X^3 + Y^3 X^2 + Y^2 X^3 + Y^2 X + Y X^3 + Y X^2 + Y + X^4";

pub const U0_T2T1_MOD_T: &str = r"(X^4 Y^3 + X^4 Y^2 + X^4 Y + X^4 + X^3 Y^7 + X^3 Y^6 + X^3 Y^4
+ X^2 Y^5 + X Y^5 + X Y^4 + X^6 + Y^4)/Y^8";

pub const PHI_T2T: &str = r"X^9 + Y^9 + (X^8 Y^4 + X^4 Y^8) + (T^2 + T + 1)(X^8 Y^2 + X^2 Y^8)
+ (T^2 + T)(X^8 Y + X Y^8) + (T^6 + T^5 + T^3 + T^2 + 1)(T^2 + T)(X^8 + Y^8) + (X^7 Y^4 + X^4 Y^7)
+ (T^2 + T)^3(X^7 Y^3 + X^3 Y^7) + (T^5 + T^4 + T^3 + T + 1)(T^5 + T^3 + T^2 + T + 1)(T^2 + T)^3(X^7 + Y^7)
+ (X^6 Y^5 + X^5 Y^6) + (X^6 Y^4 + X^4 Y^6) + (T^2 + T + 1)^5(X^6 Y^3 + X^3 Y^6)
+ (T^7 + T^6 + T^5 + T^4 + T^2 + T + 1)(T^7 + T^3 + T^2 + T + 1)(T^2 + T)(X^6 Y^2 + X^2 Y^6)
+ (T^14 + T^13 + T^11 + T^10 + T^7 + T^5 + T^4 + T^2 + 1)(T^2 + T)^2(X^6 Y + X Y^6)
+ (T^4 + T + 1)(T^2 + T + 1)(T^2 + T)^5(T^8 + T^6 + T^5 + T^4 + T^3 + T + 1)(X^6 + Y^6)
+ X^5 Y^5 + (T^2 + T + 1)(T^2 + T)^2(X^5 Y^4 + X^4 Y^5) + (T^2 + T)^2(X^5 Y^3 + X^3 Y^5)
+ (T^9 + T^8 + T^7 + T^5 + 1)(T^9 + T^7 + T^6 + T^3 + T^2 + T + 1)(X^5 Y^2 + X^2 Y^5)
+ (T^6 + T^5 + T^2 + T + 1)(T^6 + T^5 + 1)(T^2 + T + 1)^3(T^2 + T)^2(X^5 Y + X Y^5)
+ (T^5 + T^3 + T^2 + T + 1)(T^5 + T^4 + T^3 + T + 1)(T^2 + T + 1)(T^2 + T)^5(X^5 + Y^5)
+ (T^18 + T^17 + T^16 + T^10 + T^9 + T^4 + T^2 + T + 1)(T^2 + T + 1)^2(T^2 + T)(X^4 Y^2 + X^2 Y^4)
+ (T^2 + T + 1)^2(T^2 + T)^7(X^4 Y + X Y^4) + (T^2 + T)^8(T^6 + T^5 + T^3 + T^2 + 1)(X^4 + Y^4)
+ (T^10 + T^9 + T^8 + T^6 + T^5 + T + 1)(T^2 + T + 1)^3 X^3 Y^3
+ (T^8 + T^7 + T^2 + T + 1)(T^8 + T^7 + T^6 + T^5 + T^4 + T^3 + 1)(T^2 + T + 1)(T^2 + T)^2(X^3 Y^2 + X^2 Y^3)
+ (T^2 + T + 1)(T^2 + T)^4(T^10 + T^9 + T^8 + T^3 + T^2 + T + 1)(X^3 Y + X Y^3)
+ (T^4 + T + 1)(T^3 + T + 1)(T^3 + T^2 + 1)(T^2 + T + 1)^3(T^2 + T)^3 X^2 Y^2
+ (T^2 + T)^10(X^2 Y + X Y^2) + (T^2 + T)^10(X^2 + Y^2) + (T^4 + T + 1)(T^2 + T)^7(X^3 + Y^3)
+ (T^3 + T + 1)(T^3 + T^2 + 1)(T^2 + T)^6 X Y + (T^2 + T + 1)(T^2 + T)^8(X + Y) + (T^2 + T)^9";

pub const J0_T2T: &str = "(u^3 + (T^2 + T)u + (T^2 + T))^3/(u(u + T)^2(u + T + 1)^2)";
pub const J1_T2T: &str = "(u^3 + (T^2 + T)u^2 + (T^2 + T)^2)^3/(u^4(u + T)^2(u + T + 1)^2)";

pub const FACTORS_T2T: [&str; 4] = [
    "XY + T^2 + T",
    "Y^2X^2 + TY^2X + (T^2 + T)YX + (T^3 + T^2)Y + T^2X^2 + T^4 + T^2",
    "Y^2X^2 + (T+1)Y^2X + (T^2+T)YX + (T^3+T)Y + (T^2+1)X^2 + T^4 + T^2",
    r"Y^4X^3 + Y^4X^2 + (T^2+T)Y^4X + (T^2+T)Y^3X^2 + (T^2+T)Y^3X + (T^4+T^2)Y^3 + (T^2+T+1)Y^2X^3
+ (T^4+T^2)Y^2X + (T^4+T^2)Y^2 + (T^2+T)YX^3 + (T^4+T)YX^2 + (T^6+T^5+T^4+T^3)Y + X^4",
];

pub const REDUCED_T2T: &str =
    "Y^4X^3 + Y^4X^2 + Y^4X + Y^3X^2 + Y^3X + Y^3 + Y^2X + Y^2 + YX^3 + Y + X^4";

/// SHA-256 of every string above, in declaration order.
pub const CHECKSUMS: &[(&str, &str)] = &[
    (
        "PHI_T",
        "e98583c6b446517922ab790a9374223e2f12ba97a45b167c67b3cda1beee996b",
    ),
    (
        "PSI_T",
        "a879fff07cc5ee7aadb95eb3cfb16102db8e3d54004f297353f1579ce3291518",
    ),
    (
        "U0_T",
        "0ccf14badc84c9fac28933f80f5d1f4e53a10b488ceef3a65e30fab87fbca211",
    ),
    (
        "J0_T",
        "1f13088e5aec23c341879f37a1832f8c888721a0f451a406237d9e7b7f39f481",
    ),
    (
        "J1_T",
        "dbdf7dfc6261ac12ed8104181c1fc36d8ba19231a8001b917fc30e310ad5d75e",
    ),
    (
        "EXPANDED_T",
        "9b83676fd4f64e4805aeae5727ecf7256254afb3c6957fb2c1aab2b6c2edf888",
    ),
    (
        "FACTORS_T[0]",
        "9abe354ee54f61ecae74d743f9a080039081d13b07702ed72a3f578810a23624",
    ),
    (
        "FACTORS_T[1]",
        "0814f6c6c93e21ed697d325fba34a089738adbf48a88e327ebd0cae28b9a2727",
    ),
    (
        "PHI_T2T1",
        "1447b072f2d2fd1977934ff7c603568f143707cb3c6b4e96f1ad01a0e77eccbe",
    ),
    (
        "J0_T2T1",
        "815ab654996d2b1430cb195b6e8ef6b91936a31061c43d1828938fcd7187e554",
    ),
    (
        "J1_T2T1",
        "2c31e2312da974d3cc379361d814a143a07749ef7a550e6cb7f8a3ff2a090d47",
    ),
    (
        "EXPANDED_T2T1",
        "894b80631c24322f22e49dee58a8372e48994f8f06f1693d7349e0adf1112ea3",
    ),
    (
        "FACTORS_T2T1[0]",
        "f93d964791eb5f8974a40c38046b181e715a22f823f3f265b036ac004266a411",
    ),
    (
        "FACTORS_T2T1[1]",
        "d1b7cf139b7c59fce2740fa8223e01ae15f62957dec38e86b8878068c174774e",
    ),
    (
        "REDUCED_T2T1",
        "e15eaf0b75faa4ba76e4a03833af8264026cea7ef19945a6e098575b185f29b9",
    ),
    (
        "U0_T2T1_MOD_T",
        "2e281b3faab440a32d98845b733514bab8d44e7bc98e300fbb75a7b3bfcb1710",
    ),
    (
        "PHI_T2T",
        "e060594dafa8d0fb9e3e0812559a5f02c6bc2a3b4704b7a79fe9e09a9737617d",
    ),
    (
        "J0_T2T",
        "6659e69523e60574731d6cf9b13f2105026ab89a2225c614ee06287ac8fcf29d",
    ),
    (
        "J1_T2T",
        "aac335a15ae02b5a7af4cd9dbdb7a1f34897e68d876ff9471dcd6e8f2d2e92d6",
    ),
    (
        "FACTORS_T2T[0]",
        "1c070c32331cdb4f84e5412fa34d9a14351ffe2c04aa78a0e13f8204ec44a96e",
    ),
    (
        "FACTORS_T2T[1]",
        "a4bbee5e1e2bc9783b64db6a9625d8707a49a14b8dd24ab2fcd7deb46decce29",
    ),
    (
        "FACTORS_T2T[2]",
        "d5dc0cc724b00e66f54c64ef7d53af7a5fc4e648e0dd4c2ebfc2fbd3c69c402f",
    ),
    (
        "FACTORS_T2T[3]",
        "c156811f7854c54ce7ca5b591c5b497e00a215b056f53be906ce480f7cbad064",
    ),
    (
        "REDUCED_T2T",
        "24c53ce262604b6a98b9038a08480dbafeec90832904534fc905ecf2aaa33e59",
    ),
];
