#ifndef DUPCALC_IO_HPP_
#define DUPCALC_IO_HPP_

#include <string>

#include "dupcalc/duplicator.hpp"

namespace dupcalc {

// JSON (de)serialization.  Formats:
//   algebra:    {"name","signature":[{"symbol","arity"}...],"size",
//                "labels"?,"ops":{symbol: flat row-major array}}
//   duplicator: {"name","base_signature":[...],"m","mode",
//                "entries":[{"name","arity","terms":[text...]}],
//                "witnesses":{"recover":{sym:{coord:text}},
//                             "merge":text,"permute":{perm:text}}}
std::string algebra_to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const std::string& text);

std::string duplicator_to_json(const Duplicator& g);
Duplicator duplicator_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

FiniteAlgebra load_algebra_file(const std::string& path);
Duplicator load_duplicator_file(const std::string& path);

}  // namespace dupcalc

#endif  // DUPCALC_IO_HPP_
