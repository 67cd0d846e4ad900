#include "hermop/varid.hpp"

namespace hermop {

std::string tag_name(VarTag tag) {
    switch (tag) {
        case VarTag::T: return "T";
        case VarTag::Z: return "Z";
        case VarTag::W: return "W";
        case VarTag::X: return "X";
        case VarTag::Y: return "Y";
        case VarTag::D: return "D";
        case VarTag::Dinv: return "dinv";
    }
    throw logic_error("tag_name: unknown tag");
}

std::string VarId::to_string() const {
    if (tag == VarTag::Dinv) return "dinv";
    return tag_name(tag) + std::to_string(row) + std::to_string(col);
}

VarId make_var(VarTag tag, int row, int col) {
    HERMOP_DOMAIN_CHECK(tag != VarTag::Dinv, "make_var: dinv carries no indices");
    HERMOP_DOMAIN_CHECK(row >= 1 && row <= 9 && col >= 1 && col <= 9,
                        "make_var: indices must lie in 1..9, got (" + std::to_string(row) +
                            "," + std::to_string(col) + ")");
    return VarId{tag, row, col};
}

void VarUniverse::declare(VarTag tag, int rows, int cols) {
    HERMOP_DOMAIN_CHECK(rows >= 1 && rows <= 9 && cols >= 1 && cols <= 9,
                        "VarUniverse::declare: shape out of the supported 1..9 range");
    shapes_.insert(Shape{tag, rows, cols});
}

bool VarUniverse::contains(const VarId& v) const {
    if (v.tag == VarTag::Dinv) return true;
    for (const auto& s : shapes_)
        if (s.tag == v.tag && v.row >= 1 && v.row <= s.rows && v.col >= 1 && v.col <= s.cols)
            return true;
    return false;
}

std::string VarUniverse::describe() const {
    std::string out;
    for (const auto& s : shapes_) {
        if (!out.empty()) out += ", ";
        out += tag_name(s.tag) + "[" + std::to_string(s.rows) + "x" + std::to_string(s.cols) + "]";
    }
    return out.empty() ? "(empty)" : out;
}

} // namespace hermop
