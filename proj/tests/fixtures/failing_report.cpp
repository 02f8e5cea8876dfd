// Emits a report with a failure payload of every detail kind, for schema validation.

#include "ranklab/io.hpp"

#include <iostream>

int main() {
    using namespace ranklab;
    Report r;
    r.config.entries = {"x"};
    r.config.audit = true;
    Instance in;
    in.m = 2;
    in.matrices = {{"A", Matrix::identity(2)}};
    in.scalars = {{"lambda", Scalar(3)}};
    EntryReport e{"x", 1, 5, 2, {}};
    e.failures.push_back({in, std::int64_t(1), std::int64_t(2)});
    e.failures.push_back({in, Matrix::identity(2), Matrix::zero(2, 2)});
    e.failures.push_back({in, std::vector<bool>{true, false}, std::vector<bool>{true, true}});
    e.failures.push_back({in, std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{2, 2}});
    e.failures.push_back({in, std::string("threw"), std::monostate{}});
    r.entries.push_back(e);
    r.audit.push_back({"x", "note", "literal", "corrected", true, 1, 2, 0, 3, 0});
    std::cout << reportJson(r);
}
