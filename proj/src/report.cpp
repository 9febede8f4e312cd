#include "fuscat/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace fuscat {

json quad_to_json(const QuadVal& v) {
    json j;
    j["a"] = rat_str(v.a());
    j["b"] = rat_str(v.b());
    j["c"] = v.c().get_str();
    return j;
}

QuadVal quad_from_json(const json& j) {
    Rat a = rat_parse(j.at("a").get<std::string>());
    Rat b = rat_parse(j.at("b").get<std::string>());
    Int c(j.at("c").get<std::string>());
    return QuadVal(a, b, c);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace fuscat
