#include "dragonbound/catalog.hpp"

#include <sstream>

namespace dragonbound {

const std::vector<SystemRecord>& bundled_catalog() {
    static const std::vector<SystemRecord> records = [] {
        auto rec = [](const char* name, const char* sigma, const char* tau) {
            return SystemRecord{name, FoldingSystem::parse(sigma),
                                BoundarySystem::parse(tau)};
        };
        std::vector<SystemRecord> v;
        v.push_back(rec("heighway", "A-B", "L=Ll,R=S,l=S,r=Rr,S=Lr,s=Rl"));
        v.push_back(rec("curve9", "A-B+A-B+A+B-A+B+A",
                        "L=LsrR,R=SSRsrR,l=lLslSS,r=lLsr,S=SSS,s=lLslSRsrR"));
        v.push_back(rec("curve17", "B+A-B-A+B+A+B-A+B+A-B-A-B+A-B+A+B",
                        "L=rLsr,R=rLrRslRr,l=LlRslLrL,r=LsrL,S=rLrRslLrL,s=LlRslRr"));
        v.push_back(rec("curve10", "B+A+B-A-B-A+B+A+B-A",
                        "L=rLs,R=rSRs,l=slSL,r=srL,S=rSSL,s=slRs"));
        v.push_back(rec("curve8", "A+B-A-B+A+B+A-B",
                        "L=SS,R=RlRrS,l=SLlRl,r=SS,S=RlRl,s=SLlRrS"));
        v.push_back(rec("curve5", "A+B+A-B-A", "L=RlL,R=RrL,l=rLl,r=rRl,S=Rsl,s=rSL"));
        return v;
    }();
    return records;
}

std::vector<SystemRecord> parse_catalog(std::istream& in) {
    std::vector<SystemRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t tab = line.find('\t', pos);
            if (tab == std::string::npos) tab = line.size();
            fields.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
        if (fields.size() < 2 || fields.size() > 3)
            throw word_error("catalog line " + std::to_string(lineno) +
                             ": expected name<TAB>word[<TAB>productions]");
        try {
            SystemRecord rec{fields[0], FoldingSystem::parse(fields[1]), std::nullopt};
            if (fields.size() == 3) rec.expected = BoundarySystem::parse(fields[2]);
            records.push_back(std::move(rec));
        } catch (const word_error& e) {
            throw word_error("catalog line " + std::to_string(lineno) + ": " + e.what(),
                             e.position);
        }
    }
    return records;
}

std::string catalog_line(const SystemRecord& rec) {
    std::string s = rec.name + "\t" + rec.system.production_a().str();
    if (rec.expected) s += "\t" + rec.expected->str();
    return s;
}

}  // namespace dragonbound
