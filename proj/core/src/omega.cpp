#include "subapprox/omega.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace subapprox {

// Expression tree for formulas in the single variable j.
class OmegaFunction::Node {
public:
    enum class Op { constant, variable, add, sub, mul, div, pow, neg, call };

    Op op = Op::constant;
    double value = 0.0;
    std::function<double(double)> fn;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;

    [[nodiscard]] double eval(double j) const {
        switch (op) {
            case Op::constant: return value;
            case Op::variable: return j;
            case Op::add: return lhs->eval(j) + rhs->eval(j);
            case Op::sub: return lhs->eval(j) - rhs->eval(j);
            case Op::mul: return lhs->eval(j) * rhs->eval(j);
            case Op::div: return lhs->eval(j) / rhs->eval(j);
            case Op::pow: return std::pow(lhs->eval(j), rhs->eval(j));
            case Op::neg: return -lhs->eval(j);
            case Op::call: return fn(lhs->eval(j));
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const OmegaFunction::Node>;
using Op = OmegaFunction::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<OmegaFunction::Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// expr  := term (('+' | '-') term)*
// term  := unary (('*' | '/') unary)*
// unary := '-' unary | power
// power := primary ('^' unary)?
// primary := number | 'j' | name '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad omega expression at " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = make(Op::add, n, term());
            else if (accept('-')) n = make(Op::sub, n, term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = make(Op::mul, n, unary());
            else if (accept('/')) n = make(Op::div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::neg, unary());
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return make(Op::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (accept('(')) {
            NodePtr n = expr();
            if (!accept(')')) fail("missing ')'");
            return n;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            const double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            auto n = std::make_shared<OmegaFunction::Node>();
            n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
            const std::string name = s_.substr(pos_, end - pos_);
            pos_ = end;
            if (name == "j") return make(Op::variable);
            std::function<double(double)> fn;
            if (name == "log") fn = [](double x) { return std::log(x); };
            else if (name == "exp") fn = [](double x) { return std::exp(x); };
            else if (name == "sqrt") fn = [](double x) { return std::sqrt(x); };
            else if (name == "abs") fn = [](double x) { return std::abs(x); };
            else fail("unknown name '" + name + "'");
            if (!accept('(')) fail("expected '(' after " + name);
            NodePtr arg = expr();
            if (!accept(')')) fail("missing ')'");
            auto n = std::make_shared<OmegaFunction::Node>();
            n->op = Op::call;
            n->fn = std::move(fn);
            n->lhs = std::move(arg);
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

OmegaFunction OmegaFunction::power(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("power omega needs beta > 0");
    OmegaFunction f;
    f.kind_ = Kind::power;
    f.beta_ = beta;
    std::ostringstream os;
    os << "pow:" << beta;
    f.description_ = os.str();
    return f;
}

OmegaFunction OmegaFunction::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("omega table needs at least two rows");
    for (std::size_t k = 1; k < points.size(); ++k)
        if (!(points[k].first > points[k - 1].first))
            throw std::invalid_argument("omega table j column must be strictly increasing");
    OmegaFunction f;
    f.kind_ = Kind::table;
    f.points_ = std::move(points);
    f.description_ = "table";
    return f;
}

OmegaFunction OmegaFunction::load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open omega table " + path);
    std::vector<std::pair<double, double>> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("omega table row needs two columns: " + line);
        try {
            points.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            if (!first) throw std::invalid_argument("bad omega table row: " + line);
        }
        first = false;
    }
    OmegaFunction f = table(std::move(points));
    f.description_ = "table:" + path;
    return f;
}

OmegaFunction OmegaFunction::expression(const std::string& formula) {
    OmegaFunction f;
    f.kind_ = Kind::expression;
    f.formula_ = Parser(formula).parse();
    f.description_ = "expr:" + formula;
    return f;
}

OmegaFunction OmegaFunction::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("omega spec must be pow:, table: or expr:");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "pow") {
        std::size_t used = 0;
        double beta = 0.0;
        try {
            beta = std::stod(rest, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in " + spec);
        }
        if (used != rest.size()) throw std::invalid_argument("bad exponent in " + spec);
        return power(beta);
    }
    if (kind == "table") return load_table(rest);
    if (kind == "expr") return expression(rest);
    throw std::invalid_argument("unknown omega kind '" + kind + "'");
}

double OmegaFunction::operator()(double j) const {
    switch (kind_) {
        case Kind::power: return std::pow(j, -beta_);
        case Kind::expression: return formula_->eval(j);
        case Kind::table: {
            if (j < points_.front().first || j > points_.back().first)
                throw std::out_of_range("omega table does not cover j = " + std::to_string(j));
            auto hi = std::lower_bound(points_.begin(), points_.end(), j,
                                       [](const auto& p, double x) { return p.first < x; });
            if (hi->first == j) return hi->second;
            auto lo = std::prev(hi);
            const double t = (j - lo->first) / (hi->first - lo->first);
            return lo->second + t * (hi->second - lo->second);
        }
    }
    return 0.0;
}

void OmegaFunction::check_monotone(double j_max) const {
    std::vector<double> grid;
    constexpr int n = 2000;
    for (int k = 0; k <= n; ++k) grid.push_back(1.0 + (j_max - 1.0) * k / n);
    for (const auto& [j, w] : points_)
        if (j >= 1.0 && j <= j_max) grid.push_back(j);
    std::sort(grid.begin(), grid.end());

    double previous = (*this)(grid.front());
    for (double j : grid) {
        const double v = (*this)(j);
        if (!(v >= 0.0)) throw std::invalid_argument("omega is negative at j = " + std::to_string(j));
        if (v > previous * (1.0 + 1e-12)) throw std::invalid_argument("omega is not monotone non-increasing");
        previous = v;
    }
}

}  // namespace subapprox
