#include "wca/io.hpp"

#include <fstream>
#include <sstream>

namespace wca::io {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Returns false at end of input; blank lines and "#" comments are skipped.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const auto begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos || raw[begin] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

std::pair<int, int> parse_header(LineReader& reader) {
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no + 1, "missing header line \"n k\"");
    std::istringstream ss(line);
    int n = 0, k = 0;
    std::string extra;
    if (!(ss >> n >> k) || (ss >> extra))
        throw ParseError(reader.line_no, "header must be two integers \"n k\"");
    if (n < 1) throw ParseError(reader.line_no, "n must be >= 1");
    if (k < 1) throw ParseError(reader.line_no, "k must be >= 1");
    return {n, k};
}

void reject_trailing_content(LineReader& reader) {
    std::string line;
    if (reader.next(line)) throw ParseError(reader.line_no, "unexpected content after the last row");
}

}  // namespace

BinaryMatrix read_wam(std::istream& in) {
    LineReader reader{in};
    const auto [n, k] = parse_header(reader);
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(n) * k);
    for (int r = 0; r < n; ++r) {
        std::string line;
        if (!reader.next(line))
            throw ParseError(reader.line_no + 1,
                             "unexpected end of file: expected " + std::to_string(n) + " rows, got " +
                                 std::to_string(r));
        std::istringstream ss(line);
        std::string token;
        int count = 0;
        while (ss >> token) {
            if (token != "0" && token != "1")
                throw ParseError(reader.line_no, "matrix cells must be 0 or 1, got \"" + token + "\"");
            if (++count > k)
                throw ParseError(reader.line_no, "expected " + std::to_string(k) + " values per row");
            cells.push_back(token == "1" ? 1 : 0);
        }
        if (count != k)
            throw ParseError(reader.line_no, "expected " + std::to_string(k) + " values, got " +
                                                 std::to_string(count));
    }
    reject_trailing_content(reader);
    return BinaryMatrix(n, k, std::move(cells));
}

void write_wam(std::ostream& out, const BinaryMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << int{row[c]};
        }
        out << '\n';
    }
}

AssignmentTable read_wat(std::istream& in) {
    LineReader reader{in};
    const auto [n, k] = parse_header(reader);
    AssignmentTable table;
    table.k = k;
    table.rows.resize(n);
    for (int r = 0; r < n; ++r) {
        std::string line;
        if (!reader.next(line))
            throw ParseError(reader.line_no + 1,
                             "unexpected end of file: expected " + std::to_string(n) + " rows, got " +
                                 std::to_string(r));
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head.empty() || head.back() != ':')
            throw ParseError(reader.line_no, "row must start with \"<user>:\"");
        int user = 0;
        try {
            std::size_t used = 0;
            user = std::stoi(head.substr(0, head.size() - 1), &used);
            if (used != head.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(reader.line_no, "row must start with \"<user>:\"");
        }
        if (user != r + 1)
            throw ParseError(reader.line_no, "rows must be numbered 1.." + std::to_string(n) +
                                                 " in order, got " + std::to_string(user));
        int code = 0, prev = 0;
        while (ss >> code) {
            if (code < 1 || code > k)
                throw ParseError(reader.line_no, "code numbers must be in 1.." + std::to_string(k));
            if (code <= prev)
                throw ParseError(reader.line_no, "code numbers must be strictly ascending");
            table.rows[r].push_back(code);
            prev = code;
        }
        if (!ss.eof())
            throw ParseError(reader.line_no, "code numbers must be integers");
    }
    reject_trailing_content(reader);
    return table;
}

void write_wat(std::ostream& out, const AssignmentTable& table) {
    out << table.rows.size() << ' ' << table.k << '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r + 1) << ':';
        for (int code : table.rows[r]) out << ' ' << code;
        out << '\n';
    }
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

}  // namespace

BinaryMatrix load_wam(const std::string& path) {
    auto in = open_input(path);
    return read_wam(in);
}

void save_wam(const std::string& path, const BinaryMatrix& m) {
    auto out = open_output(path);
    write_wam(out, m);
    if (!out) throw std::runtime_error("failed while writing " + path);
}

std::string wam_string(const BinaryMatrix& m) {
    std::ostringstream out;
    write_wam(out, m);
    return out.str();
}

AssignmentTable load_wat(const std::string& path) {
    auto in = open_input(path);
    return read_wat(in);
}

void save_wat(const std::string& path, const AssignmentTable& table) {
    auto out = open_output(path);
    write_wat(out, table);
    if (!out) throw std::runtime_error("failed while writing " + path);
}

std::string wat_string(const AssignmentTable& table) {
    std::ostringstream out;
    write_wat(out, table);
    return out.str();
}

}  // namespace wca::io
