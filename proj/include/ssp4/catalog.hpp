#pragma once

// Embedded curve catalog: the 30 F_11 isomorphism classes, the 9 closure
// classes with their re-chosen equations, the partition into closure
// classes, the published group orders/names and generator matrices used by
// the verification suites, and curve-file ingestion.

#include <map>
#include <string>
#include <vector>

#include "ssp4/autgrp.hpp"
#include "ssp4/ortho.hpp"

namespace ssp4 {

struct CurveRecord {
    std::string id;  // "N1:3", "Dege:12", "alc:5"
    QKind kind;
    QuadraticForm Q;
    Poly P;
    int closure_class = 0;  // 1..9
    bool is_closure_rep = false;
};

const Field* catalog_field();  // F_11

// 8 + 5 + 17 = 30 records over F_11.
const std::vector<CurveRecord>& catalog_f11();
// 9 closure-class representatives.
const std::vector<CurveRecord>& catalog_closure();
const CurveRecord& catalog_find(const std::string& id);

// Curve files: {"id":..., "kind":"N1|N2|Dege", "epsilon":2?,
//   "P": [{"coef":1,"exps":[3,0,0,0]}, ...] or "P": "x^3 + y^3 + w^3"}.
// A file may hold one object or an array of them.
std::vector<CurveRecord> load_catalog_file(const std::string& path);

// Published per-curve results (order and group name) used by --check mode
// and the acceptance suite.
struct ExpectedEntry {
    std::string id;
    uint64_t order;
    std::string group_name;
};
const std::vector<ExpectedEntry>& expected_f11();
const std::vector<ExpectedEntry>& expected_closure();

// Published sigma-conjugacy data per closure class.
struct GaloisExpectation {
    int closure_class;
    int class_count;
    std::vector<int> stabilizer_orders;  // sorted ascending
};
const std::vector<GaloisExpectation>& expected_galois();

// Published generator matrices with their element orders.
struct PrintedGen {
    Mat4 m;
    int order;
};
const std::map<std::string, std::vector<PrintedGen>>& printed_generators();

// Published sigma-stabilizer generator for both classes of alc:8.
Mat4 printed_alc8_stabilizer_generator();

// zeta = the distinguished generator of F_121 (root of t^2+7t+2).
FieldElem catalog_zeta();
// Render a field element as "0".."10" over F_11 or "z^e" over F_121.
std::string zeta_string(const FieldElem& e);

}  // namespace ssp4
