#include "cubiclat/gram_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cubiclat {

namespace {

// whitespace-separated tokens with '#' comments stripped; handles CR/LF
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        for (char& ch : line)
            if (ch == '\r' || ch == '\t') ch = ' ';
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ == tokens_.size(); }

    std::string next(const char* what) {
        if (done()) throw parse_error(std::string("unexpected end of document, expected ") + what);
        return tokens_[pos_++];
    }

    void expect_keyword(const std::string& kw) {
        std::string tok = next(("keyword '" + kw + "'").c_str());
        if (tok != kw)
            throw parse_error("expected keyword '" + kw + "', got '" + tok + "'");
    }

    long next_long(const char* what) {
        std::string tok = next(what);
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw parse_error(std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
    }

    mpz_class next_mpz(const char* what) {
        std::string tok = next(what);
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw parse_error(std::string("expected integer for ") + what + ", got '" + tok + "'");
        return v;
    }

    void expect_done() {
        if (!done())
            throw parse_error("unexpected trailing token '" + tokens_[pos_] + "'");
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

GramMatrix read_gram(std::istream& in) {
    TokenReader r(tokenize(in));
    r.expect_keyword("rank");
    long rank = r.next_long("rank");
    if (rank < 1) throw parse_error("rank must be >= 1");
    r.expect_keyword("gram");
    std::vector<mpz_class> e;
    e.reserve(std::size_t(rank) * rank);
    for (long i = 0; i < rank * rank; ++i) e.push_back(r.next_mpz("gram entry"));
    r.expect_done();
    try {
        return GramMatrix(rank, std::move(e));
    } catch (const parameter_error& ex) {
        throw parse_error(ex.what());
    }
}

GramMatrix read_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open gram file '" + path + "'");
    return read_gram(in);
}

void write_gram(std::ostream& out, const GramMatrix& G) {
    out << "rank " << G.rank() << "\n";
    out << "gram\n";
    for (long i = 0; i < G.rank(); ++i) {
        for (long j = 0; j < G.rank(); ++j) {
            if (j) out << ' ';
            out << G.at(i, j);
        }
        out << '\n';
    }
}

OKGramMatrix read_ok_gram(std::istream& in) {
    TokenReader r(tokenize(in));
    r.expect_keyword("family");
    Family fam;
    try {
        fam = family_from_name(r.next("family name"));
    } catch (const parameter_error& ex) {
        throw parse_error(ex.what());
    }
    r.expect_keyword("a");
    long a = r.next_long("a");
    r.expect_keyword("rank");
    long rank = r.next_long("rank");
    if (rank < 1) throw parse_error("rank must be >= 1");
    r.expect_keyword("okgram");
    std::vector<OrderElement> e;
    e.reserve(std::size_t(rank) * rank);
    for (long i = 0; i < rank * rank; ++i) {
        mpz_class x = r.next_mpz("entry x coordinate");
        mpz_class y = r.next_mpz("entry y coordinate");
        mpz_class z = r.next_mpz("entry z coordinate");
        e.push_back({std::move(x), std::move(y), std::move(z)});
    }
    r.expect_done();
    try {
        return OKGramMatrix(CubicOrder(fam, a), rank, std::move(e));
    } catch (const parameter_error& ex) {
        throw parse_error(ex.what());
    }
}

OKGramMatrix read_ok_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open gram file '" + path + "'");
    return read_ok_gram(in);
}

void write_ok_gram(std::ostream& out, const OKGramMatrix& L) {
    out << "family " << family_name(L.order().family()) << "\n";
    out << "a " << L.order().a() << "\n";
    out << "rank " << L.rank() << "\n";
    out << "okgram\n";
    for (long i = 0; i < L.rank(); ++i) {
        for (long j = 0; j < L.rank(); ++j) {
            const OrderElement& v = L.at(i, j);
            if (j) out << "   ";
            out << v.x << ' ' << v.y << ' ' << v.z;
        }
        out << '\n';
    }
}

} // namespace cubiclat
