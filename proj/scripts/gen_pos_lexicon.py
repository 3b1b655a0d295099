#!/usr/bin/env python3
"""Generate data/pos_lexicon.tsv, the open-class lookup table for the rule tagger.

The tagger resolves a word in this order: closed-class list (in the C++ code),
this lexicon, suffix heuristics, NOUN fallback.  The lexicon therefore earns its
keep in two places: words the suffix heuristics would mislabel (family, king,
bed, animal, ...) and common open-class words with no telltale suffix.

Entries are word<TAB>tag, lowercase, sorted, one tag per word.  When a word is
reachable from several sections the earliest section wins (see PRECEDENCE).
"""

import sys
from pathlib import Path

# Words whose suffix would send them to the wrong tag.  Checked first.
OVERRIDES = {
    # -ly but not adverbs
    "family": "NOUN", "families": "NOUN", "supply": "NOUN", "assembly": "NOUN",
    "butterfly": "NOUN", "jelly": "NOUN", "belly": "NOUN", "rally": "NOUN",
    "ally": "NOUN", "allies": "NOUN", "bully": "NOUN", "folly": "NOUN",
    "lily": "NOUN", "monopoly": "NOUN", "anomaly": "NOUN", "melancholy": "NOUN",
    "holy": "ADJ", "lovely": "ADJ", "friendly": "ADJ", "lonely": "ADJ",
    "likely": "ADJ", "ugly": "ADJ", "silly": "ADJ", "elderly": "ADJ",
    "deadly": "ADJ", "lively": "ADJ", "costly": "ADJ", "heavenly": "ADJ",
    "worldly": "ADJ", "earthly": "ADJ", "godly": "ADJ", "unholy": "ADJ",
    "cowardly": "ADJ", "orderly": "ADJ", "motherly": "ADJ", "fatherly": "ADJ",
    "sisterly": "ADJ", "brotherly": "ADJ", "womanly": "ADJ", "manly": "ADJ",
    "unlikely": "ADJ", "unfriendly": "ADJ", "unseemly": "ADJ", "early": "ADJ",
    # -ing but not verbs
    "king": "NOUN", "kings": "NOUN", "ring": "NOUN", "thing": "NOUN",
    "things": "NOUN", "spring": "NOUN", "string": "NOUN", "wing": "NOUN",
    "wings": "NOUN", "morning": "NOUN", "mornings": "NOUN", "evening": "NOUN",
    "evenings": "NOUN", "wedding": "NOUN", "weddings": "NOUN",
    "building": "NOUN", "buildings": "NOUN", "ceiling": "NOUN",
    "darling": "NOUN", "duckling": "NOUN", "sibling": "NOUN",
    "siblings": "NOUN", "feeling": "NOUN", "feelings": "NOUN",
    "meaning": "NOUN", "meanings": "NOUN", "painting": "NOUN",
    "paintings": "NOUN", "warning": "NOUN", "warnings": "NOUN",
    "clothing": "NOUN", "offspring": "NOUN", "pudding": "NOUN",
    "herring": "NOUN", "lightning": "NOUN", "upbringing": "NOUN",
    "blessing": "NOUN", "blessings": "NOUN", "greeting": "NOUN",
    "greetings": "NOUN", "belonging": "NOUN", "belongings": "NOUN",
    "teachings": "NOUN", "writings": "NOUN", "surroundings": "NOUN",
    "willing": "ADJ", "unwilling": "ADJ", "cunning": "ADJ",
    "outstanding": "ADJ", "everlasting": "ADJ", "during": "OTHER",
    # -ed but not verbs
    "bed": "NOUN", "beds": "NOUN", "seed": "NOUN", "seeds": "NOUN",
    "creed": "NOUN", "greed": "NOUN", "deed": "NOUN", "deeds": "NOUN",
    "weed": "NOUN", "reed": "NOUN", "shed": "NOUN", "sled": "NOUN",
    "hatred": "NOUN", "red": "ADJ", "wicked": "ADJ", "sacred": "ADJ",
    "naked": "ADJ", "crooked": "ADJ", "rugged": "ADJ", "wretched": "ADJ",
    "beloved": "ADJ", "blessed": "ADJ", "aged": "ADJ", "learned": "ADJ",
    "steadfast": "ADJ",
    # -al but not adjectives
    "animal": "NOUN", "animals": "NOUN", "hospital": "NOUN",
    "capital": "NOUN", "metal": "NOUN", "petal": "NOUN", "pedal": "NOUN",
    "medal": "NOUN", "signal": "NOUN", "journal": "NOUN", "criminal": "NOUN",
    "festival": "NOUN", "interval": "NOUN", "rival": "NOUN",
    "arrival": "NOUN", "approval": "NOUN", "proposal": "NOUN",
    "refusal": "NOUN", "survival": "NOUN", "denial": "NOUN",
    "burial": "NOUN", "funeral": "NOUN", "mineral": "NOUN",
    "terminal": "NOUN", "scandal": "NOUN", "sandal": "NOUN",
    "crystal": "NOUN", "portal": "NOUN", "recital": "NOUN",
    "removal": "NOUN", "reversal": "NOUN", "carnival": "NOUN",
    "cathedral": "NOUN", "cereal": "NOUN", "mammal": "NOUN", "canal": "NOUN",
    "ritual": "NOUN", "rituals": "NOUN", "trial": "NOUN", "trials": "NOUN",
    "betrayal": "NOUN", "material": "NOUN", "materials": "NOUN",
    "memorial": "NOUN", "tribunal": "NOUN", "withdrawal": "NOUN",
    # -ive / -ful but not adjectives
    "detective": "NOUN", "motive": "NOUN", "motives": "NOUN",
    "objective": "NOUN", "alternative": "NOUN", "initiative": "NOUN",
    "perspective": "NOUN", "representative": "NOUN", "executive": "NOUN",
    "relative": "NOUN", "relatives": "NOUN", "explosive": "NOUN",
    "olive": "NOUN", "captive": "NOUN", "archive": "NOUN",
    "incentive": "NOUN", "adjective": "NOUN", "directive": "NOUN",
    "narrative": "NOUN", "handful": "NOUN", "spoonful": "NOUN",
    "armful": "NOUN",
    # high-frequency ambiguous forms pinned to their common reading
    "said": "VERB", "say": "VERB", "says": "VERB", "saying": "VERB",
    "reported": "VERB", "narrated": "VERB", "born": "VERB",
    "left": "VERB", "felt": "VERB", "kept": "VERB", "meant": "VERB",
    "told": "VERB", "thought": "VERB", "brought": "VERB", "bought": "VERB",
    "taught": "VERB", "caught": "VERB", "sought": "VERB", "fought": "VERB",
}

IRREGULAR_VERBS = [
    # lemma past participle
    ("arise", "arose", "arisen"), ("awake", "awoke", "awoken"),
    ("bear", "bore", "borne"), ("beat", "beat", "beaten"),
    ("become", "became", "become"), ("begin", "began", "begun"),
    ("bend", "bent", "bent"), ("bet", "bet", "bet"),
    ("bind", "bound", "bound"), ("bite", "bit", "bitten"),
    ("bleed", "bled", "bled"), ("blow", "blew", "blown"),
    ("break", "broke", "broken"), ("breed", "bred", "bred"),
    ("bring", "brought", "brought"), ("build", "built", "built"),
    ("burst", "burst", "burst"), ("buy", "bought", "bought"),
    ("cast", "cast", "cast"), ("catch", "caught", "caught"),
    ("choose", "chose", "chosen"), ("cling", "clung", "clung"),
    ("come", "came", "come"), ("cost", "cost", "cost"),
    ("creep", "crept", "crept"), ("cut", "cut", "cut"),
    ("deal", "dealt", "dealt"), ("dig", "dug", "dug"),
    ("dive", "dove", "dived"), ("draw", "drew", "drawn"),
    ("dream", "dreamt", "dreamt"), ("drink", "drank", "drunk"),
    ("drive", "drove", "driven"), ("dwell", "dwelt", "dwelt"),
    ("eat", "ate", "eaten"), ("fall", "fell", "fallen"),
    ("feed", "fed", "fed"), ("feel", "felt", "felt"),
    ("fight", "fought", "fought"), ("flee", "fled", "fled"),
    ("fling", "flung", "flung"), ("fly", "flew", "flown"),
    ("forbid", "forbade", "forbidden"), ("forget", "forgot", "forgotten"),
    ("forgive", "forgave", "forgiven"), ("forsake", "forsook", "forsaken"),
    ("freeze", "froze", "frozen"), ("get", "got", "gotten"),
    ("give", "gave", "given"), ("go", "went", "gone"),
    ("grind", "ground", "ground"), ("grow", "grew", "grown"),
    ("hang", "hung", "hung"), ("hear", "heard", "heard"),
    ("hide", "hid", "hidden"), ("hit", "hit", "hit"),
    ("hold", "held", "held"), ("hurt", "hurt", "hurt"),
    ("kneel", "knelt", "knelt"), ("know", "knew", "known"),
    ("lay", "laid", "laid"), ("lead", "led", "led"),
    ("lean", "leant", "leant"), ("leap", "leapt", "leapt"),
    ("learn", "learnt", "learnt"), ("leave", "left", "left"),
    ("lend", "lent", "lent"), ("let", "let", "let"),
    ("lie", "lay", "lain"), ("light", "lit", "lit"),
    ("lose", "lost", "lost"), ("make", "made", "made"),
    ("mean", "meant", "meant"), ("meet", "met", "met"),
    ("mistake", "mistook", "mistaken"), ("mourn", "mourned", "mourned"),
    ("overcome", "overcame", "overcome"), ("pay", "paid", "paid"),
    ("prove", "proved", "proven"), ("quit", "quit", "quit"),
    ("read", "read", "read"), ("ride", "rode", "ridden"),
    ("rise", "rose", "risen"), ("run", "ran", "run"),
    ("seek", "sought", "sought"), ("sell", "sold", "sold"),
    ("send", "sent", "sent"), ("set", "set", "set"),
    ("sew", "sewed", "sewn"), ("shake", "shook", "shaken"),
    ("shine", "shone", "shone"), ("shoot", "shot", "shot"),
    ("shrink", "shrank", "shrunk"), ("shut", "shut", "shut"),
    ("sing", "sang", "sung"), ("sink", "sank", "sunk"),
    ("sit", "sat", "sat"), ("slay", "slew", "slain"),
    ("sleep", "slept", "slept"), ("slide", "slid", "slid"),
    ("sling", "slung", "slung"), ("sow", "sowed", "sown"),
    ("speak", "spoke", "spoken"), ("speed", "sped", "sped"),
    ("spell", "spelt", "spelt"), ("spend", "spent", "spent"),
    ("spill", "spilt", "spilt"), ("spin", "spun", "spun"),
    ("spit", "spat", "spat"), ("split", "split", "split"),
    ("spread", "spread", "spread"), ("stand", "stood", "stood"),
    ("steal", "stole", "stolen"), ("stick", "stuck", "stuck"),
    ("sting", "stung", "stung"), ("stink", "stank", "stunk"),
    ("strike", "struck", "struck"), ("strive", "strove", "striven"),
    ("swear", "swore", "sworn"), ("sweep", "swept", "swept"),
    ("swell", "swelled", "swollen"), ("swim", "swam", "swum"),
    ("swing", "swung", "swung"), ("teach", "taught", "taught"),
    ("tear", "tore", "torn"), ("tell", "told", "told"),
    ("think", "thought", "thought"), ("throw", "threw", "thrown"),
    ("thrust", "thrust", "thrust"), ("tread", "trod", "trodden"),
    ("undergo", "underwent", "undergone"),
    ("understand", "understood", "understood"),
    ("wake", "woke", "woken"), ("wear", "wore", "worn"),
    ("weave", "wove", "woven"), ("weep", "wept", "wept"),
    ("win", "won", "won"), ("wind", "wound", "wound"),
    ("withdraw", "withdrew", "withdrawn"), ("write", "wrote", "written"),
]

REGULAR_VERBS = """
accept achieve act add admire admit advise afford agree aim allow announce
annoy answer apologize appear applaud apply appoint approach approve argue
arrange arrest arrive ask assist assume attack attempt attend attract avoid
bake balance ban base bathe battle behave believe belong blame bless boil
borrow bother bounce bow breathe brush bury calculate camp care carry carve
cause celebrate challenge change charge chase cheat check cheer chew claim
clean clear climb close collect comb combine comfort command comment
communicate compare compete complain complete concern confess confirm connect
consider consist contain continue convince cook copy correct cough count
cover crash crawl create cross crush cry damage dance dare decide declare
decorate defend delay deliver demand deny depend deserve desire destroy
develop die disagree disappear discover discuss divide dress earn educate
embarrass employ encourage end enjoy enter entertain escape examine exist
expand expect explain explore express extend face fail fasten fetch fill film
fix float flood flow fold follow force form gather gaze glow greet guard
guess guide handle happen harm hate heal heat help hope hunt hurry identify
ignore imagine improve include increase influence inform injure intend
interrupt introduce invent invite involve join joke judge jump kick kill kiss
knock label land laugh launch lick lift like list listen live load lock look
love manage march mark marry match matter measure melt mention mix moan
multiply murder need notice obey observe obtain offend offer open order owe
pack paint pardon park pass peel perform persuade pick place plan plant play
point pollute pour practice praise pray preach prefer prepare present press
pretend prevent print produce promise protect provide pull punish push race
raise reach realize receive recite recognize recommend record reduce reflect
refuse regret reject relax release rely remain remember remind remove repair
repeat replace reply report request require rescue respect respond rest
return reveal roar roll rush sail save scare scatter scream search select
serve settle share shout sigh smile snore solve sort sound spare spoil start
stare state stay steer stop store stretch struggle study submit succeed
suffer suggest support suppose surprise surround survive suspect talk taste
tempt test thank tie touch train travel treat tremble trust try turn type
unite use visit wait walk wander want warn wash watch water wave weigh
welcome whisper wish wonder work worry worship wound yell
""".split()

# Lemmas whose final consonant doubles before -ed / -ing.
DOUBLE_FINAL = set("""
ban bat beg begin bet chat chop clap commit cut dig drag drop drum fit flag
flap flip flop forbid forget gag get grab grin grip hit hop hug hum jam jog
kid knit lag lap let log map mob mop nag nap net nod occur omit pat peg
permit pin pit plan plot plug pop prefer prod prop quit ram rap refer regret
rim rip rob rot rub run scan scrub set shop shrug shut sin sip sit skim skip
slam slap slip snap sob spam spin spit split spot squat stab step stir stop
strap strip stun submit sum swap swim tan tap thin throb tip top trap trim
trip tug wag whip win wrap zip
""".split())

IRREGULAR_NOUNS = {
    "man": "men", "woman": "women", "child": "children", "foot": "feet",
    "tooth": "teeth", "mouse": "mice", "person": "people", "ox": "oxen",
    "goose": "geese", "crisis": "crises", "analysis": "analyses",
    "basis": "bases", "thesis": "theses", "phenomenon": "phenomena",
    "criterion": "criteria", "sheep": "sheep", "deer": "deer",
    "series": "series", "species": "species", "life": "lives",
    "wife": "wives", "knife": "knives", "leaf": "leaves", "wolf": "wolves",
    "shelf": "shelves", "thief": "thieves", "loaf": "loaves",
    "half": "halves", "calf": "calves", "self": "selves",
}

NOUNS = """
ability absence accident account act action activity address adult advantage
advice age agency agreement air airport amount anger angle answer apartment
appeal appearance apple application appointment area argument arm army art
article artist attack attention attitude audience author authority baby
balance ball bank bar base basket bath battle beach bear beauty behavior
belief bell belt bench benefit bike bird birth birthday bit blame blanket
block blood board boat bone bonus book boot border boss bottle bottom bowl
box boy brain branch bread breakfast breast breath brick bridge brother
brush budget burden bus bush business butter button cake calendar camera
camp campaign cancer candidate candle cap car card career carpet case cash
cat category cause celebration cell chain chair chance chapter charity chart
cheek cheese chest chicken chief childhood china chocolate choice church
circle citizen city claim class classroom client climate clock cloth cloud
club coach coast coat code coffee cold collar college color column comfort
committee company comparison competition computer concept concern conclusion
condition conference confidence conflict confusion connection consequence
contact content contest context contract contribution control conversation
cook corner cost cotton couch country county couple courage course court
cousin cow craft cream credit crew crime crowd culture cup currency current
curtain curve customer cycle dad danger data date daughter dawn day dealer
dear debate debt decision definition degree delight delivery demand
departure deposit depression depth design desire desk dessert destination
destruction device devil diamond diet difference difficulty dinner
direction director dirt disaster discipline discourse discussion disease
dish distance doctor document dog door dot doubt dozen draft drama drawer
dream drink driver drop drug dust duty eagle ear earth east economy edge
editor education effect effort egg election element emergency emotion
emphasis employee employer employment energy engine entrance environment
equipment error essay estate event evidence exam example exchange
excitement excuse exercise exit experience expert explanation expression
extent eye face fact factor factory failure fan farm farmer fashion father
fault favor fear feature fee female fence field figure film finger fish
flight floor flour flower fog food forest fork form fortune foundation frame
freedom friend friendship fruit fuel fun function future game gap garage
garden gas gate gear gene gift girl glass goal god gold golf government
grade grain grandmother grass growth guarantee guest guidance guitar gun guy
habit hair hall hand harm hat head health hearing heart heat heaven height
hell hero highway hill history hole holiday homework honey honor hook horse
hotel hour housing human humor hunger ice idea image imagination impact
importance impression improvement inch income independence indication
industry inflation information insect instance instruction insurance
intention interaction interview investment iron island item jacket job joke
joy judgment juice jury justice key kid kitchen knee knowledge lab ladder
lady lake lamp language law lawyer layer leader leadership league lecture
leg length lesson letter level library lie light limit line link lip liquid
literature living loan location lock log loss lot love luck lunch machine
magazine mail male mall manager manner map margin market marriage mate
mathematics meal meat medicine meeting membership memory menu mess message
method midnight migration milk mind minister minute mirror mission mistake
mixture mode model mom moment money month mood moon morality mother motion
mountain mouth movie mud muscle music nail nation nature neck needle
neighbor nephew nerve nest network niece night noise noon nose note notice
novel number nurse oasis obligation occasion ocean office officer oil
operation opinion opportunity option orange organization outcome oven owner
ownership oxygen pace package page pain pair pan paper parent park passage
passenger passion path patience patient pattern pause payment peace pen
penalty pension percentage period permission philosophy phone photo phrase
physics piano picture piece pin pipe pitch pizza plane planet plate platform
pleasure poem poet poetry police policy pond pool population position
possession possibility post pot potato poverty power practice prayer
presence president pressure price pride priest prince princess principle
priority prison prisoner problem procedure process product profession
professor profit program progress project promise promotion proof property
prophet protection psychology public punishment pupil purpose quality
quantity quarter queen question rain range rate ratio reaction
reality reason recipe recognition recording region relation relationship
religion rent repair resident resource responsibility restaurant result
revenue reward rhythm rice river road rock role roof room root rope rose
route routine row rule sample sand scale scene schedule scheme scholarship
science score screen script sea season seat secretary section sector
security sense sentence sermon session shadow shame shape sheet ship shirt
shoe shoulder sign silence silver singer sir sister site situation size
skill skin skirt sky snow society sock soil soldier solution son song sort
soul soup source speech spirit sport spot square stage stair standard star
statement station status steak steam stick stomach stone storage store
storm story stranger strategy street strength stress structure student
studio study stuff style subject substance success sugar suggestion summer
sun surface surgery sympathy table tale talent tank target task tax tea
teacher team tear technology teenager telephone television temperature
temple tennis tension term text theme theory throat ticket tide time tin
tip title tone tongue tool tooth topic tour tourist towel tower town toy
trade tradition traffic trainer transition truck truth tune tunnel type
uncle understanding union unit university vacation valley value van variety
vegetable vehicle version victim victory video view village virtue vision
voice volume wall wealth weapon weather web week weekend weight west wheel
widow width wind window wine winner winter wisdom witness wood wool worker
worship wound writer yard year youth zone
""".split()

ADJECTIVES = """
able absent abstract academic acceptable accurate active actual acute
adequate advanced afraid aggressive alive alert alone amazed amused ancient
angry annoyed anxious apparent appropriate ashamed asleep automatic available
average awake aware awful awkward bad bare basic beautiful bitter black
blind blond blue bold brave brief bright brilliant broad broken brown busy
calm capable careless cheap chronic civil classic clean clever cold
collective comfortable common competent complex concrete confident conscious
consistent constant content convenient cool correct crazy critical crucial
cruel curious current cute dangerous dark dead deaf dear decent deep
definite deliberate delicate delicious dependent desperate different
difficult diligent dirty distant distinct divine dizzy domestic dominant
double dry dual dumb eager eastern easy efficient elderly electric elegant
eligible empirical entire equal equivalent essential eternal evident evil
exact excellent exclusive expensive explicit express extreme fair faint
faithful false familiar famous fancy fast fat favorite feminine fierce fine
firm fiscal fit flat flexible fond foolish foreign formal fragile free
frequent fresh full fundamental funny future gay generous gentle genuine
glad glorious golden good gorgeous grand grateful gray great green gross
guilty handsome happy hard healthy heavy hidden high hollow honest hot huge
human humble hungry ill immediate immense immune implicit important inclined
inevitable innocent intact intense intimate invisible jealous joint just
keen kind large late lazy lean legal legitimate liable liberal light
literary little live logical long loose loud low loyal mad main major male
masculine massive mature mean medium mental mere merciful mild military
minor mobile moderate modern modest moral mutual narrow nasty naval near
neat necessary nervous neutral new nice noble normal northern notable
obvious odd official okay old opposite optimistic oral organic original
other outdoor overall pale parallel particular passive past patient
peaceful perfect permanent pink plain pleasant polite poor popular possible
potent powerful practical precious precise pregnant premier present pretty
previous prime principal private probable profound prominent prompt proper
proud pure purple quick quiet quite rapid rare rational raw ready real
recent regular relevant reluctant remote resident rich ripe robust
rough round royal rubber rude rural sad safe salty same scarce scared
secret secular secure senior sensible sensitive separate severe shallow
sharp sheer shiny short shy sick significant silent similar simple sincere
single slight slow small smart smooth soft solar sole solid sophisticated
sore sorry southern spare sparse specific spicy spiritual splendid stable
stark steady steep sticky stiff still straight strange strict strong stupid
subsequent subtle sudden sufficient suitable sunny superb superior supreme
sure sweet swift tall technical temporary tender terrible thick thin tight
tiny tired top tough toxic traditional tragic tremendous tribal tricky
tropical ultimate unable unaware uncertain uncomfortable undue uneasy unfair
uniform unique united universal unknown unlawful unprecedented upset urban
urgent useful usual vague vain valid valuable vast verbal vertical viable
vibrant violent virtual visible vital vivid vulnerable warm weak weird
western wet white wide wild wise wonderful wooden worthy wounded yellow
young
""".split()

ADVERBS = """
abroad ahead aloud anew anyhow apart aside astray away downstairs downtown
forever forth halfway indoors inside instead maybe nearby nevertheless
nowadays outdoors outside overnight overseas seldom sometime somewhat soon
tomorrow tonight twice today upstairs yesterday
""".split()

PRECEDENCE = ("override", "verb", "adjective", "adverb", "noun")


def third_person(lemma: str) -> str:
    if lemma.endswith(("s", "sh", "ch", "x", "z", "o")):
        return lemma + "es"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    return lemma + "s"


def gerund(lemma: str) -> str:
    if lemma in DOUBLE_FINAL:
        return lemma + lemma[-1] + "ing"
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        return lemma[:-1] + "ing"
    return lemma + "ing"


def past(lemma: str) -> str:
    if lemma in DOUBLE_FINAL:
        return lemma + lemma[-1] + "ed"
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ied"
    return lemma + "ed"


def plural(lemma: str) -> str:
    if lemma in IRREGULAR_NOUNS:
        return IRREGULAR_NOUNS[lemma]
    if lemma.endswith(("s", "sh", "ch", "x", "z")):
        return lemma + "es"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    if lemma.endswith("o") and lemma not in ("photo", "piano", "radio", "video", "zero"):
        return lemma + "es"
    return lemma + "s"


def main() -> int:
    sections = []
    sections.append(("override", OVERRIDES.items()))

    verb_entries = []
    for lemma, pst, part in IRREGULAR_VERBS:
        for form in {lemma, pst, part, third_person(lemma), gerund(lemma)}:
            verb_entries.append((form, "VERB"))
    for lemma in REGULAR_VERBS:
        for form in {lemma, third_person(lemma), past(lemma), gerund(lemma)}:
            verb_entries.append((form, "VERB"))
    sections.append(("verb", verb_entries))

    sections.append(("adjective", [(w, "ADJ") for w in ADJECTIVES]))
    sections.append(("adverb", [(w, "ADV") for w in ADVERBS]))

    noun_entries = []
    for lemma in NOUNS:
        noun_entries.append((lemma, "NOUN"))
        noun_entries.append((plural(lemma), "NOUN"))
    for singular, pl in IRREGULAR_NOUNS.items():
        noun_entries.append((singular, "NOUN"))
        noun_entries.append((pl, "NOUN"))
    sections.append(("noun", noun_entries))

    assert tuple(name for name, _ in sections) == PRECEDENCE

    lexicon = {}
    for _, entries in sections:
        for word, tag in entries:
            lexicon.setdefault(word, tag)

    out = Path(__file__).resolve().parent.parent / "data" / "pos_lexicon.tsv"
    with out.open("w", encoding="utf-8") as fh:
        for word in sorted(lexicon):
            fh.write(f"{word}\t{lexicon[word]}\n")
    print(f"{out}: {len(lexicon)} entries")
    return 0


if __name__ == "__main__":
    sys.exit(main())
