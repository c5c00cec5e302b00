#ifndef ONEPOINT_IO_HPP
#define ONEPOINT_IO_HPP

#include <string>

#include "json.hpp"
#include "onepoint/generator.hpp"
#include "onepoint/holonomic.hpp"
#include "onepoint/oracle.hpp"
#include "onepoint/recursion.hpp"

namespace onepoint {

using Json = nlohmann::json;

// Exact values serialize as decimal integer or "p/q" strings; polynomials
// as coefficient-string arrays, lowest degree first.
Json json_of(const PolyQ& p);
PolyQ polyq_from_json(const Json& j);
Json json_of(const K& v);
K k_from_json(const Json& j);

Json json_of(const ProblemSpec& p);
ProblemSpec problem_from_json(const Json& j);

Json json_of(const InvariantTable& t);
InvariantTable table_from_json(const Json& j);

Json json_of(const PRecurrence& rec);
PRecurrence recurrence_from_json(const Json& j);

Json json_of(const HLevelRelation& rel);
HLevelRelation relation_from_json(const Json& j);

Json json_of(const GDRecursion& rec);
GDRecursion gd_from_json(const Json& j);

// Oracle output, table-schema compatible.
Json json_of(const GluingCount& c, const std::string& kind);

// "2(2d-3)" style display: content, rational-root factors ascending, any
// rootless remainder expanded in descending powers.
std::string pretty_poly_factored(const PolyQ& p, const std::string& var);

// "d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)"
std::string pretty_gd(const GDRecursion& rec, const std::string& symbol);

// "(-2+4*d)*c(d) + (-1-d+h^2*d^2+h^2*d^3)*c(d+1) = 0"
std::string pretty_recurrence(const PRecurrence& rec, const std::string& seq);

// "(6-4*d)*n(d-1) + (d-h^2*d^3+...)*n(d) = 0" style shift form.
std::string pretty_relation(const HLevelRelation& rel);

}  // namespace onepoint

#endif
