#!/usr/bin/env python3
"""Regenerates the bundled fixture data under data/.

    python3 tools/make_fixtures.py [data_dir]

Output is deterministic (fixed seeds), so rerunning leaves the tree unchanged.

  stop_words.txt   stop list
  stem_map.txt     inflected/root pairs
  gazetteer.csv    divisions, districts and thanas with canvas coordinates
  train/           40 labeled records (8 per category)
  corpus/          20 evaluation records: 8 crime, 4 sports, 3 entertainment,
                   2 technology, 3 others, including 2 planted duplicate pairs
  pipeline.conf    config wiring the above together
"""

import random
import sys
from pathlib import Path

# --------------------------------------------------------------------------
# Lexicon

STOP_WORDS = [
    # core stop list
    "এক", "নামের", "করে", "তিনি", "রয়েছেন", "জানান", "তার", "দিয়ে", "থাকা", "নিয়ে",
    "যায়", "ছিল", "বলে", "আছে", "প্রথমে", "যাওয়া", "হয়", "পরে", "করা", "গুনেছি",
    "কিনা", "ভাল", "দেখা", "হচ্ছে",
    # pronouns, conjunctions, auxiliaries
    "এ", "ও", "এই", "সে", "তারা", "তাদের", "তাকে", "আমি", "আমরা", "তবে", "কিন্তু", "আর",
    "এবং", "না", "থেকে", "জন্য", "সঙ্গে", "কাছে", "মধ্যে", "হবে", "যে", "এর", "গত",
    "হয়েছে", "হয়েছেন", "বলেন", "জানা", "দিকে", "একটি", "কোনো", "সব", "সবাই", "এখন",
    "আরও", "অবশ্য", "তা", "হলো", "হলে", "করতে", "পর", "আগে", "জন",
]

CORE_STEMS = [
    ("পুলিশে", "পুলিশ"), ("পুলিশকে", "পুলিশ"), ("পুলিশের", "পুলিশ"), ("পুলিশও", "পুলিশ"),
    ("পুলিশদের", "পুলিশ"), ("পুলিশরা", "পুলিশ"), ("খেলায়", "খেলা"), ("খেলার", "খেলা"),
    ("খেলাতে", "খেলা"), ("খেলাকে", "খেলা"),
]

EXTRA_STEMS = [
    # chained entry, collapsed to the root on load
    ("পুলিশদেরকে", "পুলিশদের"),
    ("ডাকাতির", "ডাকাতি"), ("ডাকাতদের", "ডাকাত"), ("ডাকাতদল", "ডাকাত"), ("খুনের", "খুন"),
    ("হত্যার", "হত্যা"), ("মামলার", "মামলা"), ("আসামিকে", "আসামি"), ("আসামির", "আসামি"),
    ("ছিনতাইয়ের", "ছিনতাই"), ("অস্ত্রের", "অস্ত্র"), ("আহতদের", "আহত"), ("আহতরা", "আহত"),
    ("ম্যাচে", "ম্যাচ"), ("উইকেটে", "উইকেট"), ("রানের", "রান"), ("রানে", "রান"), ("দলের", "দল"),
    ("জয়ের", "জয়"), ("ইনিংসে", "ইনিংস"),
    ("নাটকে", "নাটক"), ("চরিত্রের", "চরিত্র"), ("চলচ্চিত্রের", "চলচ্চিত্র"), ("গানের", "গান"),
    ("স্মার্টফোনটির", "স্মার্টফোন"), ("সংস্করণটি", "সংস্করণ"), ("প্রযুক্তির", "প্রযুক্তি"),
    ("ওয়েবসাইটে", "ওয়েবসাইট"),
    ("সরকারের", "সরকার"), ("বাজারে", "বাজার"), ("সড়কে", "সড়ক"),
    # verb forms whose root is a stop word
    ("করেছে", "করা"), ("করেন", "করা"), ("হয়েছিল", "হয়"),
]

# --------------------------------------------------------------------------
# Gazetteer: (name, lat, lon); canvas x = (lon - 88.0) / 4.7, y = (26.6 - lat) / 6.0

DIVISIONS = [
    ("ঢাকা", 23.81, 90.41), ("চট্টগ্রাম", 22.36, 91.78), ("রাজশাহী", 24.37, 88.60),
    ("খুলনা", 22.85, 89.54), ("বরিশাল", 22.70, 90.35), ("সিলেট", 24.89, 91.87),
    ("রংপুর", 25.74, 89.28), ("ময়মনসিংহ", 24.75, 90.41),
]

DISTRICTS = [  # name, division, lat, lon
    ("ঢাকা", "ঢাকা", 23.81, 90.41), ("গাজীপুর", "ঢাকা", 24.00, 90.42),
    ("নারায়ণগঞ্জ", "ঢাকা", 23.62, 90.50), ("টাঙ্গাইল", "ঢাকা", 24.25, 89.92),
    ("চট্টগ্রাম", "চট্টগ্রাম", 22.36, 91.78), ("কুমিল্লা", "চট্টগ্রাম", 23.46, 91.18),
    ("কক্সবাজার", "চট্টগ্রাম", 21.43, 92.01), ("সিলেট", "সিলেট", 24.89, 91.87),
    ("মৌলভীবাজার", "সিলেট", 24.48, 91.77), ("সুনামগঞ্জ", "সিলেট", 25.07, 91.40),
    ("রাজশাহী", "রাজশাহী", 24.37, 88.60), ("বগুড়া", "রাজশাহী", 24.85, 89.37),
    ("খুলনা", "খুলনা", 22.85, 89.54), ("যশোর", "খুলনা", 23.17, 89.21),
    ("বরিশাল", "বরিশাল", 22.70, 90.35), ("রংপুর", "রংপুর", 25.74, 89.28),
    ("দিনাজপুর", "রংপুর", 25.63, 88.64), ("ময়মনসিংহ", "ময়মনসিংহ", 24.75, 90.41),
]

THANAS = [  # name, district, lat, lon
    ("দোহার", "ঢাকা", 23.59, 90.14), ("সবুজবাগ", "ঢাকা", 23.74, 90.43),
    ("মোহাম্মদপুর", "ঢাকা", 23.76, 90.36), ("কেরানীগঞ্জ", "ঢাকা", 23.70, 90.35),
    ("রামপুরা", "ঢাকা", 23.76, 90.42),
    ("রাজনগর", "মৌলভীবাজার", 24.55, 91.85), ("শ্রীমঙ্গল", "মৌলভীবাজার", 24.31, 91.73),
    ("টঙ্গী", "গাজীপুর", 23.89, 90.40), ("ফতুল্লা", "নারায়ণগঞ্জ", 23.65, 90.49),
    ("হাটহাজারী", "চট্টগ্রাম", 22.50, 91.81), ("লাকসাম", "কুমিল্লা", 23.24, 91.13),
    ("টেকনাফ", "কক্সবাজার", 20.86, 92.30), ("বোয়ালিয়া", "রাজশাহী", 24.37, 88.60),
    ("জৈন্তাপুর", "সিলেট", 25.13, 92.12), ("ছাতক", "সুনামগঞ্জ", 25.04, 91.67),
    ("সোনাডাঙ্গা", "খুলনা", 22.82, 89.53), ("অভয়নগর", "যশোর", 23.01, 89.44),
    ("গৌরনদী", "বরিশাল", 22.97, 90.23), ("মিঠাপুকুর", "রংপুর", 25.55, 89.28),
    ("ত্রিশাল", "ময়মনসিংহ", 24.58, 90.39),
]

VOWEL_SIGNS = set("ািীুূৃেৈোৌ")


def place_inflections(name):
    """Genitive and locative forms of a place name."""
    if name[-1] in VOWEL_SIGNS:
        return [name + "র", name + "য়"]
    return [name + "ের", name + "ে"]


def canvas(lat, lon):
    return round((lon - 88.0) / 4.7, 4), round((26.6 - lat) / 6.0, 4)


# --------------------------------------------------------------------------
# Vocabulary pools for generated articles

POOLS = {
    "crime": [
        "ডাকাতি", "ডাকাতির", "ডাকাত", "ডাকাতদল", "খুন", "খুনের", "হত্যা", "হত্যার", "পুলিশ", "পুলিশের",
        "পুলিশকে", "মামলা", "মামলার", "আসামি", "আসামিকে", "ছিনতাই", "ছিনতাইকারী", "গ্রেপ্তার", "অস্ত্র",
        "অস্ত্রের", "থানায়", "লুট", "আহত", "নিহত", "দুর্বৃত্ত", "দুর্বৃত্তরা", "কুপিয়ে", "জিম্মি",
        "স্বর্ণালঙ্কার", "অপহরণ", "মাদক", "ইয়াবা", "হামলা", "রায়", "খালাস", "মৃত্যুদণ্ড", "আদালত",
        "ধারালো", "লাশ", "উদ্ধার", "অভিযান", "গ্রেফতার",
    ],
    "sports": [
        "খেলা", "খেলায়", "খেলার", "ম্যাচ", "ম্যাচে", "উইকেট", "উইকেটে", "রান", "রানের", "দল", "দলের",
        "অধিনায়ক", "ইনিংস", "ইনিংসে", "ব্যাট", "বল", "জয়", "জয়ের", "টুর্নামেন্ট", "গোল", "ফুটবল",
        "ক্রিকেট", "চ্যাম্পিয়ন", "সিরিজ", "ওভার", "বোলার", "বিশ্বকাপ", "ফাইনাল", "শিরোপা", "টস",
        "অপরাজিত", "ছক্কা", "স্টেডিয়াম", "ব্যাটিং",
    ],
    "entertainment": [
        "নাটক", "নাটকে", "চলচ্চিত্র", "চলচ্চিত্রের", "অভিনেতা", "অভিনেত্রী", "গান", "গানের", "শিল্পী",
        "পর্দা", "পর্দায়", "চরিত্র", "চরিত্রের", "পরিচালক", "মুক্তি", "দর্শক", "কনসার্ট", "অ্যালবাম",
        "টিভি", "রূপ", "অভিনয়", "সিনেমা", "শুটিং", "প্রযোজক", "ধারাবাহিক", "আলাপচারিতা", "তারকা",
    ],
    "technology": [
        "স্মার্টফোন", "স্মার্টফোনটির", "প্রযুক্তি", "প্রযুক্তির", "ইন্টারনেট", "সফটওয়্যার", "সংস্করণ",
        "সংস্করণটি", "অ্যাপ", "কম্পিউটার", "প্রতিষ্ঠান", "ওয়েবসাইট", "ওয়েবসাইটে", "গ্যালাক্সি",
        "প্রসেসর", "ব্যাটারি", "ক্যামেরা", "স্যামসাং", "অ্যাপল", "গুগল", "ডিভাইস", "মিনি", "ফেসবুক",
        "ব্যবহারকারী", "অফিশিয়াল", "ঘোষণা", "তথ্য",
    ],
    "others": [
        "শিক্ষা", "বাজেট", "সরকার", "সরকারের", "মন্ত্রী", "বৈঠক", "উন্নয়ন", "প্রকল্প", "সড়ক", "সড়কে",
        "আবহাওয়া", "বৃষ্টি", "কৃষক", "ধান", "বাজার", "বাজারে", "দাম", "যানবাহন", "স্টেশন", "রাস্তায়",
        "গাড়ি", "ভোরবেলা", "বস্তা", "মুরগি", "কর্তব্য", "মনে", "কথা", "পরীক্ষা", "শিক্ষার্থী",
    ],
}

FILLER = [
    "আজ", "বছর", "দেশের", "সময়", "নতুন", "বিভিন্ন", "প্রথম", "দুই", "জানিয়েছে", "সূত্র", "খবর",
    "এলাকার", "মানুষ", "দিন", "রাতে", "সকালে", "দুপুরে", "শনিবার", "রোববার", "বিকেলে",
]

HINTS = {
    "crime": ["crime", "অপরাধ"],
    "sports": ["sports", "খেলা"],
    "entertainment": ["entertainment", "বিনোদন"],
    "technology": ["technology", "প্রযুক্তি"],
    "others": ["others", "অন্যান্য"],
}

BN_DIGITS = "০১২৩৪৫৬৭৮৯"


def bn_number(n):
    return "".join(BN_DIGITS[int(c)] for c in str(n))


def sentence(rng, category, length):
    words = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.58:
            words.append(rng.choice(POOLS[category]))
        elif roll < 0.80:
            words.append(rng.choice(FILLER))
        elif roll < 0.95:
            words.append(rng.choice(STOP_WORDS))
        else:
            words.append(bn_number(rng.randint(2, 99)))
    return " ".join(words) + "।"


def location_sentence(rng, thana, district):
    t = rng.choice([thana, place_inflections(thana)[1]])
    d = rng.choice([district, place_inflections(district)[0]])
    return f"{d} {t} থানার {rng.choice(FILLER)} এলাকায় এ ঘটনা ঘটে।"


def article(rng, category, place=None):
    title = " ".join(rng.choice(POOLS[category]) for _ in range(rng.randint(4, 6)))
    body = [title + "।"]
    for i in range(rng.randint(4, 6)):
        body.append(sentence(rng, category, rng.randint(8, 12)))
        if place and i == 0:
            body.append(location_sentence(rng, *place))
    return title, " ".join(body)


def edit_copy(rng, text, fraction=0.08):
    """Copies `text`, replacing about `fraction` of its words with filler."""
    words = text.split(" ")
    for i in rng.sample(range(len(words)), max(1, int(len(words) * fraction))):
        words[i] = rng.choice(FILLER)
    return " ".join(words)


# --------------------------------------------------------------------------
# Hand-picked news articles

DOHAR_STORY = (
    "দোহার উপজেলায় প্রবাসী নুরুল ইসলাম মাঝির বাড়িতে ডাকাতি হয়েছে। গত শনিবার রাতে উপজেলার নারিশা "
    "ইউনিয়নের ঝনকি গ্রামে এ ডাকাতি হয়। রাত ২টার দিকে ১২/১৫ জনের একটি সংঘবদ্ধ ডাকাত দল দেশীয় অস্ত্র "
    "নিয়ে উপজেলার নারিশা ইউনিয়নের ঝনকি গ্রামের কুয়েত প্রবাসী নুরুল ইসলাম মাঝির বাড়িতে হানা দেয়। "
    "ডাকাত দল বসত বাড়ির মূল গেটের কাঠের দরজা ভেঙে ভেতরে প্রবেশ করে। সেসময়ে পরিবারের সকলকে অস্ত্রের "
    "মুখে জিম্মি করে হাত বেঁধে আলমারিতে থাকা নগদ ২ লাখ ৫০ হাজার টাকা, ১০ ভরি স্বর্ণালঙ্কার, ২টি মোবাইল "
    "সেট লুটে নেয়।"
)

RAJNAGAR_STORY = (
    "রাজনগরে ডাকাতি, আহত ৩ রাজনগর (মৌলভীবাজার) প্রতিনিধি | ৩০ মার্চ ২০১৪, রবিবার, ৯:৩৬ রাজনগরে "
    "একদিনের ব্যবধানে আবারও দুর্ধর্ষ ডাকাতির ঘটনা ঘটেছে। ৮-১০ জনের ডাকাতদল অস্ত্রের মুখে জিম্মি করে ১৩ "
    "ভরি স্বর্ণালঙ্কার, নগদ ১ লাখ ৫০ হাজার টাকাসহ বিভিন্ন মালামাল লুট করে নিয়ে যায়। ডাকাতদের হামলায় "
    "মহিলাসহ ৩ জন আহত হয়েছেন। আহতরা হলেন রনু পাল (৫০) তার স্ত্রী গীতা রানী পাল (৪০) ও ছেলে রনি পাল "
    "(১৫)। আহতদের বিভিন্ন মৌলভীবাজার ২৫০ শয্যার হাসপাতালে ভর্তি করা হয়েছে। শুক্রবার গভীর রাতে দক্ষিণ "
    "টেংরা গ্রামের রনু পালের বাড়িতে মুখোশ পড়া ৮-১০ জনের একদল ডাকাত হানা দেয়।"
)

CATEGORY_SAMPLES = {
    "crime": "১৪ বছর আগে চট্টগ্রামের বহুদারহাটে ছাত্রলীগের গাড়িতে হামলা চালিয়ে আট জনকে হত্যার যে "
             "মৃত্যুদণ্ডে দণ্ডিত চার আসামির সবাই আপিলের রায়ে খালাস পেয়েছেন।",
    "sports": "টি-টোয়েন্টি বিশ্বকাপের চ্যাম্পিয়ন শ্রীলঙ্কা এখনো পর্যন্ত টি-টোয়েন্টি বিশ্বকাপের সবগুলো "
              "ম্যাচেই জয়লাভ করেছে ভারত। আইসিসি টি২০ বিশ্বকাপের ফাইনালে ভারতকে ৬ উইকেটে হারিয়ে শিরোপা "
              "নিজেদের ঘরে নিয়েছে শ্রীলঙ্কা।",
    "entertainment": "টিভি পর্দায় জাহিদ হাসানের নানা রূপ। পুরনো রূপ ভেঙে তিনি আবার নতুন রূপে হাজির হয়েছেন "
                     "'নজিরবিহীন নজির আলী' নাটকে। লিখেছেন মাহবুব হাসান জ্যোতি 'আমি ভাই ভিন্ন ধরনের "
                     "চরিত্রের কাণ্ডাল' - আলাপচারিতার শুরুতেই বললেন জাহিদ হাসান। আরমান ভাইয়ের চরিত্র "
                     "ছাপিয়ে তিনি এখন নজর আলী হয়ে উঠছেন।",
    "others": "ভোরবেলা যাচ্ছিলাম কমলাপুর স্টেশনে। রাস্তায় খুব কম যানবাহন। তবু এক সিগন্যালে একটু থামতে "
              "হলো বাঁ দিক থেকে কয়েকটি গাড়ি ক্রসিং পার হয়ে ডান দিকে আসায়। একটি পিকআপ পাশ ঘেঁষে থামতে "
              "বাধ্য হলো। অত ভোরে কোনো বোকা চালকও লালবাতি মানেন না। পিকআপে দুটো চটের বস্তা। একটি "
              "বস্তার মুখের দিকে সামান্য ফাঁক দিয়ে দেখা গেল একটি মরা মুরগির পা ও পাখনা।",
    "technology": "গ্যালাক্সি এস৫ স্মার্টফোনটির একটি মিনি বা ছোট সংস্করণ আসছে। গ্যালাক্সি এস৫ এর এ "
                  "সংস্করণটি হবে পানি-রোধী। স্যামসাং নিউজিল্যান্ডের অফিশিয়াল ওয়েবসাইটে এ তথ্য জানানো "
                  "হয়েছে। অবশ্য মিনি সংস্করণটির তথ্য এখনও আনুষ্ঠানিকভাবে ঘোষণা করেনি দক্ষিণ কোরিয়ার "
                  "প্রতিষ্ঠানটি।",
}


# --------------------------------------------------------------------------

def record(title, content, category, city, domain, stamp, url, path):
    return (
        "<Index>\n"
        f"<filePath>{path}</filePath>\n"
        "<byteInfo>1 0 0 0 0</byteInfo>\n"
        "<indexed>true</indexed>\n"
        f"<TITLE> {title}</TITLE>\n"
        f"<CONTENT> {content}</CONTENT>\n"
        f"<CATEGORY> {category}</CATEGORY>\n"
        f"<CITY> {city}</CITY>\n"
        f"<DOMAIN> {domain}</DOMAIN>\n"
        f"<DATE> {stamp}</DATE>\n"
        f"<URL>\n{url}</URL>\n"
        "<TYPE> news</TYPE>\n"
        f"<PATH> {path}</PATH>\n"
        "</Index>\n"
    )


DOMAINS = ["www.prothom-alo.com", "www.banglanews24.com", "bangla.bdnews24.com", "www.amadershomoy2.com",
           "www.jugantor.com", "www.kalerkantho.com"]


class Writer:
    def __init__(self, root, rng):
        self.root = root
        self.rng = rng
        self.n = 0
        root.mkdir(parents=True, exist_ok=True)
        for old in root.glob("*.rec"):
            old.unlink()

    def add(self, category, title, content, stamp, domain=None, city="", hint=None):
        self.n += 1
        domain = domain or self.rng.choice(DOMAINS)
        hint = hint or self.rng.choice(HINTS[category])
        url = f"http://{domain}/news/{stamp[:8]}/{self.n:03d}.html"
        path = f"crawl\\{domain}\\{stamp}"
        name = f"{self.n:03d}_{category}.rec"
        (self.root / name).write_text(record(title, content, hint, city, domain, stamp, url, path),
                                      encoding="utf-8")


def stamp_for(year, month, day, hour=9, minute=30):
    return f"{year:04d}{month:02d}{day:02d}{hour:02d}{minute:02d}"


def main():
    data = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    data.mkdir(parents=True, exist_ok=True)

    (data / "stop_words.txt").write_text(
        "# stop list, one term per line\n" + "\n".join(STOP_WORDS) + "\n", encoding="utf-8")

    stems = list(CORE_STEMS) + list(EXTRA_STEMS)
    places = [d[0] for d in DISTRICTS] + [t[0] for t in THANAS]
    for p in dict.fromkeys(places):
        stems += [(form, p) for form in place_inflections(p)]
    (data / "stem_map.txt").write_text(
        "# inflected root\n" + "\n".join(f"{a} {b}" for a, b in stems) + "\n", encoding="utf-8")

    rows = ["name,kind,parent,map_x,map_y"]
    for name, lat, lon in DIVISIONS:
        rows.append(f"{name},division,,{canvas(lat, lon)[0]},{canvas(lat, lon)[1]}")
    for name, div, lat, lon in DISTRICTS:
        rows.append(f"{name},district,{div},{canvas(lat, lon)[0]},{canvas(lat, lon)[1]}")
    for name, dist, lat, lon in THANAS:
        rows.append(f"{name},thana,{dist},{canvas(lat, lon)[0]},{canvas(lat, lon)[1]}")
    (data / "gazetteer.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")

    # Training corpus: 8 generated articles per category, unique dates in 2013.
    rng = random.Random(20130101)
    train = Writer(data / "train", rng)
    day = 0
    for category in POOLS:
        for _ in range(8):
            day += 1
            place = None
            if category == "crime":
                t = rng.choice(THANAS)
                place = (t[0], t[1])
            title, content = article(rng, category, place)
            train.add(category, title, content, stamp_for(2013, 1 + day // 28 % 12, 1 + day % 28))

    # Evaluation corpus, 2014. Every article has its own date except the planted pairs.
    rng = random.Random(20140503)
    corpus = Writer(data / "corpus", rng)
    corpus.add("crime", "দোহারে প্রবাসীর বাড়িতে ডাকাতি", DOHAR_STORY, stamp_for(2014, 3, 16),
               domain="www.prothom-alo.com", hint="crime")
    corpus.add("crime", "রাজনগরে ডাকাতি, আহত ৩", RAJNAGAR_STORY, stamp_for(2014, 3, 30),
               domain="www.banglanews24.com", hint="অপরাধ")
    corpus.add("crime", "আপিলের রায়ে খালাস চার আসামি", CATEGORY_SAMPLES["crime"], stamp_for(2014, 4, 2),
               hint="crime")

    crime_places = [("সবুজবাগ", "ঢাকা"), ("হাটহাজারী", "চট্টগ্রাম"), ("জৈন্তাপুর", "সিলেট"),
                    ("শ্রীমঙ্গল", "মৌলভীবাজার")]
    crime_dates = [(2014, 7, 12), (2014, 7, 19), (2014, 8, 4), (2014, 11, 21)]
    planted = None
    for place, (y, m, d) in zip(crime_places, crime_dates):
        title, content = article(rng, "crime", place)
        corpus.add("crime", title, content, stamp_for(y, m, d))
        if planted is None:
            planted = (title, content, stamp_for(y, m, d, 14, 5))
    # planted duplicate 1: the first crime story again from another source, lightly edited
    title, content, stamp = planted
    corpus.add("crime", title, edit_copy(rng, content), stamp, domain="www.jugantor.com", hint="অপরাধ")

    # planted duplicate 2: one cricket match reported by two outlets on the same day
    match_title, match_body = article(rng, "sports")
    corpus.add("sports", match_title, match_body, stamp_for(2014, 5, 3, 8, 0), domain="www.banglanews24.com",
               hint="sports")
    corpus.add("sports", match_title, edit_copy(rng, match_body), stamp_for(2014, 5, 3, 11, 40),
               domain="bangla.bdnews24.com", hint="খেলা")
    corpus.add("sports", "শ্রীলঙ্কার শিরোপা", CATEGORY_SAMPLES["sports"], stamp_for(2014, 4, 6), hint="sports")
    t, c = article(rng, "sports")
    corpus.add("sports", t, c, stamp_for(2014, 6, 14))

    corpus.add("entertainment", "জাহিদ হাসানের নতুন রূপ", CATEGORY_SAMPLES["entertainment"], stamp_for(2014, 4, 11),
               hint="বিনোদন")
    for y, m, d in [(2014, 6, 21), (2014, 9, 9)]:
        t, c = article(rng, "entertainment")
        corpus.add("entertainment", t, c, stamp_for(y, m, d))

    corpus.add("technology", "আসছে গ্যালাক্সি এস৫ মিনি", CATEGORY_SAMPLES["technology"], stamp_for(2014, 4, 17),
               hint="technology")
    t, c = article(rng, "technology")
    corpus.add("technology", t, c, stamp_for(2014, 10, 2))

    corpus.add("others", "ভোরের কমলাপুর", CATEGORY_SAMPLES["others"], stamp_for(2014, 4, 24), hint="অন্যান্য")
    for y, m, d in [(2014, 8, 27), (2014, 12, 5)]:
        t, c = article(rng, "others")
        corpus.add("others", t, c, stamp_for(y, m, d))

    (data / "pipeline.conf").write_text(
        "# Bundled fixture configuration. Paths are relative to this file.\n"
        "corpus_dir = corpus\n"
        "train_dir = train\n"
        "stop_words = stop_words.txt\n"
        "stem_map = stem_map.txt\n"
        "gazetteer = gazetteer.csv\n"
        "model = model.nb\n"
        "top_word_threshold = 5\n"
        "dup_threshold = 0.60\n"
        "idf_mode = smoothed\n"
        "zone_level = district\n"
        "canvas = 800x1000\n",
        encoding="utf-8")


if __name__ == "__main__":
    main()
