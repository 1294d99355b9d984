#pragma once

namespace edskit {

struct Limits {
    int max_component_size = 12;  // isomorphism / family matching
    int exact_cap = 24;           // per-component exact MEDS
    int enum_cap = 14;            // minimum-EDS enumeration
    int oracle_cap = 22;          // whole-instance decision oracle
};

}  // namespace edskit
