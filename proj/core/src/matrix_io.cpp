#include "latsieve/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latsieve {

namespace {

bool is_integer_token(const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

Int parse_int_token(const std::string& t) {
    if (!is_integer_token(t))
        throw std::invalid_argument("parse_matrix: not an integer: '" + t + "'");
    return Int(t, 10);
}

IntMat parse_bracketed(const std::string& text) {
    IntMat m;
    IntVec row;
    std::string token;
    int depth = 0;
    bool saw_outer = false;

    auto flush_token = [&] {
        if (token.empty()) return;
        if (depth != 2) throw std::invalid_argument("parse_matrix: number outside a row");
        row.push_back(parse_int_token(token));
        token.clear();
    };

    for (char ch : text) {
        if (ch == '[') {
            flush_token();
            ++depth;
            if (depth > 2) throw std::invalid_argument("parse_matrix: brackets nested too deep");
            if (depth == 1) {
                if (saw_outer) throw std::invalid_argument("parse_matrix: multiple matrices");
                saw_outer = true;
            }
            if (depth == 2) row.clear();
        } else if (ch == ']') {
            flush_token();
            if (depth == 2) {
                m.push_back(row);
                row.clear();
            }
            --depth;
            if (depth < 0) throw std::invalid_argument("parse_matrix: unbalanced brackets");
        } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            flush_token();
        } else {
            token += ch;
        }
    }
    if (depth != 0) throw std::invalid_argument("parse_matrix: unbalanced brackets");
    if (!token.empty()) throw std::invalid_argument("parse_matrix: trailing tokens");
    if (m.empty()) throw std::invalid_argument("parse_matrix: empty matrix");
    for (const auto& r : m)
        if (r.size() != m[0].size())
            throw std::invalid_argument("parse_matrix: rows have unequal lengths");
    return m;
}

IntMat parse_bare(const std::string& text) {
    IntMat m;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        IntVec row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_int_token(tok));
        if (!row.empty()) m.push_back(std::move(row));
    }
    if (m.empty()) throw std::invalid_argument("parse_matrix: empty matrix");
    for (const auto& r : m)
        if (r.size() != m[0].size())
            throw std::invalid_argument("parse_matrix: rows have unequal lengths");
    return m;
}

}  // namespace

std::string format_matrix(const IntMat& m) {
    check_rectangular(m);
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < m.size(); ++i) {
        out << (i == 0 ? "[" : " [");
        for (size_t j = 0; j < m[i].size(); ++j) {
            if (j) out << " ";
            out << m[i][j];
        }
        out << "]";
        if (i + 1 < m.size()) out << "\n";
    }
    out << "]\n";
    return out.str();
}

IntMat parse_matrix(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '[' ? parse_bracketed(text) : parse_bare(text);
    }
    throw std::invalid_argument("parse_matrix: empty input");
}

IntMat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const IntMat& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << format_matrix(m);
}

}  // namespace latsieve
