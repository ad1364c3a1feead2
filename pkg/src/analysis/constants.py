"""
Constants and templates for the analysis module.
Contains the Jinja2 templates of the text reports.
"""

# findings.txt, one block per instance with something to report
FINDINGS_TEMPLATE = """\
Verification findings (report version {{ version }})
primes: {{ primes | join(', ') if primes else 'none' }}{% if pattern %}; entries: {{ pattern }}{% endif %}
entries: {{ overview.entries }}, instances: {{ overview.instances }}
claims: {% for status, count in counts.items() %}{{ status }} {{ count }}{% if not loop.last %}, {% endif %}{% endfor %}
failed global properties: {{ overview.failed_properties }}
{% if duration is not none %}duration: {{ '%.1f' | format(duration) }}s
{% endif %}
{%- if mismatches %}

== Mismatches ({{ mismatches | length }}) ==
{% for record in mismatches %}
{{ record.entry_id }} [{{ record.assignment }}] {{ record.claim }}: expected {{ record.expected }}, computed {{ record.computed }}
{%- if record.reading %} (agrees with the reading '{{ record.reading }}'){% endif %}
{%- if record.detail %}
    {{ record.detail }}{% endif %}
{% endfor %}
{%- endif %}
{%- if properties %}

== Failed properties ({{ properties | length }}) ==
{% for item in properties %}
{{ item.entry_id }} [{{ item.assignment }}] {{ item.name }}: {{ item.detail }}
{% endfor %}
{%- endif %}
{%- if skipped %}

== Skipped ({{ skipped | length }}) ==
{% for record in skipped %}
{{ record.entry_id }}{% if record.assignment %} [{{ record.assignment }}]{% endif %} {{ record.claim }}: {{ record.detail }}
{% endfor %}
{%- endif %}
{%- if collisions %}

== Fingerprint collisions ({{ collisions | length }}) ==
{% for c in collisions %}
order {{ c.order }}: {{ c.first }} ~ {{ c.second }} ({{ c.detail }}{% if c.expected %}, expected{% endif %})
{% endfor %}
{%- endif %}
{%- if errors %}

== Infrastructure errors ({{ errors | length }}) ==
{% for error in errors %}
{{ error }}
{% endfor %}
{%- endif %}
"""

# console block of the analyze command
ANALYSIS_TEMPLATE = """\
{{ name }}: order {{ record.order }} = {{ prime }}^{{ size }}
  d = {{ record.d }}, c = {{ record.c }}, exp = {{ record.exponent }}
  |G'| = {{ record.derived_order }}{% if record.derived_type %}, G' of type {{ record.derived_type | list }}{% endif %}
  Z(G) of type {{ record.center_type | list }}
  |Phi(G)| = {{ record.frattini_order }}{% if record.frattini_type %}, Phi(G) of type {{ record.frattini_type | list }}{% endif %}
  G/G' of type {{ record.abelianization_type | list }}
  A_t index t = {{ verdict.t }}{% if mu %}, mu = {{ mu | list }}{% endif %}
  alpha_1 = {{ alpha1 }}
{%- if a1_type %}
  minimal non-abelian of type {{ a1_type }}
{%- endif %}
{%- if relations %}
  pc presentation:
{%- for line in relations %}
    {{ line }}
{%- endfor %}
{%- endif %}
"""

REPORT_SETTINGS = {
    'max_listed_skips': 200,
    'findings_file': 'findings.txt',
    'claims_file': 'claims.jsonl',
    'summary_json': 'summary.json',
    'summary_csv': 'summary.csv',
}
